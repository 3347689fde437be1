#include "ainf/directed.hpp"

#include <algorithm>
#include <numeric>

#include "ainf/error.hpp"

namespace ainf {

namespace {

constexpr std::uint64_t kExhaustiveLimit = 4096;

// Candidate elements of a homogeneous component: all nonzero vectors when
// that is exact and affordable, otherwise basis vectors and pairwise sums.
std::vector<Vec> candidates(FieldSpec field, const std::vector<std::size_t>& idx, bool& exhaustive) {
  std::vector<Vec> out;
  const std::size_t n = idx.size();
  if (n == 0) return out;
  if (n == 1) {
    out.push_back(Vec::basis(field, idx[0]));
    return out;
  }
  const std::uint64_t p = field.characteristic();
  std::uint64_t total = 1;
  bool small = p != 0;
  for (std::size_t k = 0; small && k < n; ++k) {
    if (total > kExhaustiveLimit / p) small = false;
    total *= p;
  }
  if (small) {
    for (std::uint64_t code = 1; code < total; ++code) {
      Vec v(field);
      std::uint64_t rest = code;
      for (std::size_t k = 0; k < n; ++k) {
        v.add_term(idx[k], Scalar(field, static_cast<long>(rest % p)));
        rest /= p;
      }
      out.push_back(std::move(v));
    }
    return out;
  }
  exhaustive = false;
  for (std::size_t k = 0; k < n; ++k) out.push_back(Vec::basis(field, idx[k]));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) out.push_back(Vec::basis(field, idx[a]) + Vec::basis(field, idx[b]));
  }
  return out;
}

}  // namespace

std::optional<Morphism> find_inverse(const Category& c, const Morphism& f) {
  const auto ua = c.unit(f.src);
  const auto ub = c.unit(f.dst);
  if (!ua || !ub) throw PreconditionError("inverse needs units");
  const auto cols = c.hom(f.dst, f.src).indices(-f.degree);
  const auto rows_a = c.hom(f.src, f.src).indices(0);
  const auto rows_b = c.hom(f.dst, f.dst).indices(0);
  Matrix m(c.field(), rows_a.size() + rows_b.size(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Morphism g{f.dst, f.src, -f.degree, Vec::basis(c.field(), cols[k])};
    const Morphism gf[2] = {g, f};
    const Morphism fg[2] = {f, g};
    const Vec left = apply_m(c, gf).coords;
    const Vec right = apply_m(c, fg).coords;
    for (std::size_t r = 0; r < rows_a.size(); ++r) m(r, k) = left.at(rows_a[r]);
    for (std::size_t r = 0; r < rows_b.size(); ++r) m(rows_a.size() + r, k) = right.at(rows_b[r]);
  }
  std::vector<Scalar> rhs;
  for (auto i : rows_a) rhs.push_back(ua->at(i));
  for (auto i : rows_b) rhs.push_back(ub->at(i));
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  Morphism g{f.dst, f.src, -f.degree, Vec(c.field())};
  for (std::size_t k = 0; k < cols.size(); ++k) g.coords.add_term(cols[k], (*sol)[k]);
  return g;
}

DirectedStructure analyze_directed(const Category& c) {
  const std::size_t n = c.object_count();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < c.hom(x, y).dim(); ++k) {
        const Arg a{x, y, k};
        if (!c.b(std::span<const Arg>(&a, 1)).is_zero()) {
          throw PreconditionError("directedness is decided on categories with m_1 = 0");
        }
      }
    }
  }
  // Reachability along nonzero homs.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    reach[x][x] = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (c.hom(x, y).dim() > 0) reach[x][y] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!reach[x][k]) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (reach[k][y]) reach[x][y] = true;
      }
    }
  }
  // Components, numbered by first member in input order.
  std::vector<std::size_t> comp(n, n);
  std::vector<std::size_t> leaders;
  for (std::size_t x = 0; x < n; ++x) {
    if (comp[x] != n) continue;
    comp[x] = leaders.size();
    for (std::size_t y = x + 1; y < n; ++y) {
      if (reach[x][y] && reach[y][x]) comp[y] = leaders.size();
    }
    leaders.push_back(x);
  }
  // Longest-path layer: a component's layer is the number of components on
  // the longest chain strictly below it.
  const std::size_t m = leaders.size();
  std::vector<std::size_t> layer(m, 0);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && reach[leaders[b]][leaders[a]]) ++below[a];
    }
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  for (std::size_t a : order) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && reach[leaders[b]][leaders[a]]) layer[a] = std::max(layer[a], layer[b] + 1);
    }
  }

  DirectedStructure d;
  d.block_of.resize(n);
  std::size_t top = 0;
  for (std::size_t x = 0; x < n; ++x) {
    d.block_of[x] = layer[comp[x]];
    top = std::max(top, d.block_of[x]);
  }
  d.blocks.assign(n == 0 ? 0 : top + 1, {});
  for (std::size_t x = 0; x < n; ++x) d.blocks[d.block_of[x]].push_back(x);
  d.length = d.blocks.empty() ? 0 : d.blocks.size() - 1;

  // Condition (2): nonzero morphisms within a block are invertible.
  for (const auto& block : d.blocks) {
    for (std::size_t x : block) {
      for (std::size_t y : block) {
        const GradedSpace& h = c.hom(x, y);
        // Degrees in order of first basis appearance, so witnesses follow the
        // basis order.
        std::vector<int> degs;
        for (std::size_t k = 0; k < h.dim(); ++k) {
          if (std::find(degs.begin(), degs.end(), h[k].degree) == degs.end()) degs.push_back(h[k].degree);
        }
        for (int deg : degs) {
          for (const Vec& v : candidates(c.field(), h.indices(deg), d.exhaustive)) {
            const Morphism f{x, y, deg, v};
            if (!find_inverse(c, f)) {
              d.directed = false;
              d.witness = f;
              d.reason = "non-invertible morphism " + describe(c, f) + " : " + c.object_name(x) + " -> " +
                         c.object_name(y);
              return d;
            }
          }
        }
      }
    }
  }
  d.directed = true;
  return d;
}

bool block_form_check(const TwObject& x, const DirectedStructure& d) {
  std::vector<std::size_t> blk;
  for (const auto& s : x.summands) {
    if (s.object >= d.block_of.size()) throw PreconditionError("summand object is not assigned to a block");
    blk.push_back(d.block_of[s.object]);
  }
  for (std::size_t k = 1; k < blk.size(); ++k) {
    if (blk[k] < blk[k - 1]) return false;
  }
  for (const auto& [rc, v] : x.delta) {
    if (!v.is_zero() && blk[rc.first] <= blk[rc.second]) return false;
  }
  return true;
}

TwObject regroup(const TwObject& x, const DirectedStructure& d) {
  const std::size_t n = x.summands.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& s : x.summands) {
    if (s.object >= d.block_of.size()) throw PreconditionError("summand object is not assigned to a block");
  }
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return d.block_of[x.summands[a].object] < d.block_of[x.summands[b].object];
  });
  std::vector<std::size_t> where(n);
  for (std::size_t k = 0; k < n; ++k) where[perm[k]] = k;
  TwObject out;
  out.name = x.name;
  for (std::size_t k = 0; k < n; ++k) out.summands.push_back(x.summands[perm[k]]);
  for (const auto& [rc, v] : x.delta) out.delta.emplace(std::make_pair(where[rc.first], where[rc.second]), v);
  return out;
}

}  // namespace ainf
