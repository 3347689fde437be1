#include "ainf/cohomology.hpp"

#include <set>

#include "ainf/error.hpp"

namespace ainf {

namespace {

Matrix differential_block(const Category& c, std::size_t src, std::size_t dst, const std::vector<std::size_t>& from,
                          const std::vector<std::size_t>& to) {
  Matrix m(c.field(), to.size(), from.size());
  if (to.empty() || from.empty()) return m;
  std::map<std::size_t, std::size_t> row;
  for (std::size_t r = 0; r < to.size(); ++r) row[to[r]] = r;
  for (std::size_t col = 0; col < from.size(); ++col) {
    const Arg a{src, dst, from[col]};
    const Vec v = c.b(std::span<const Arg>(&a, 1));
    for (const auto& [idx, coeff] : v) m(row.at(idx), col) = coeff;
  }
  return m;
}

Matrix columns(FieldSpec f, std::size_t rows, const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

}  // namespace

HomCohomology::HomCohomology(const Category& c, std::size_t src, std::size_t dst)
    : field_(c.field()), src_(src), dst_(dst), dim_(c.hom(src, dst).dim()) {
  const GradedSpace& h = c.hom(src, dst);
  for (int d : h.degrees()) idx_[d] = h.indices(d);
  auto indices = [&](int d) {
    auto it = idx_.find(d);
    return it == idx_.end() ? std::vector<std::size_t>{} : it->second;
  };
  std::optional<Vec> unit;
  if (src == dst) unit = c.unit(src);

  for (const auto& [d, idx] : idx_) {
    Degree g;
    g.idx = idx;
    const std::size_t n = idx.size();
    g.in_differential = differential_block(c, src, dst, indices(d - 1), idx);
    g.out_differential = differential_block(c, src, dst, idx, indices(d + 1));
    g.cycles = kernel_basis(g.out_differential);
    g.boundaries = image_basis(g.in_differential);

    std::vector<std::vector<Scalar>> spanning = g.boundaries;
    std::vector<std::vector<Scalar>> reps;
    for (const auto& z : g.cycles) {
      if (in_span(field_, spanning, z)) continue;
      spanning.push_back(z);
      reps.push_back(z);
    }
    if (d == 0 && unit && !unit->is_zero()) {
      const auto u = local(g, *unit);
      auto cols = g.boundaries;
      cols.insert(cols.end(), reps.begin(), reps.end());
      if (auto sol = solve(columns(field_, n, cols), u)) {
        for (std::size_t j = 0; j < reps.size(); ++j) {
          if (!(*sol)[g.boundaries.size() + j].is_zero()) {
            reps[j] = u;
            unit_class_ = j;
            break;
          }
        }
      }
    }
    for (const auto& r : reps) g.reps.push_back(global(idx, r));
    auto cols = g.boundaries;
    cols.insert(cols.end(), reps.begin(), reps.end());
    g.split = columns(field_, n, cols);
    degrees_.emplace(d, std::move(g));
  }
}

const HomCohomology::Degree* HomCohomology::at(int d) const {
  auto it = degrees_.find(d);
  return it == degrees_.end() ? nullptr : &it->second;
}

std::vector<Scalar> HomCohomology::local(const Degree& g, const Vec& x) const {
  std::vector<Scalar> v(g.idx.size(), Scalar(field_));
  std::size_t found = 0;
  for (std::size_t k = 0; k < g.idx.size(); ++k) {
    v[k] = x.at(g.idx[k]);
    if (!v[k].is_zero()) ++found;
  }
  if (found != x.support_size()) throw PreconditionError("element is not homogeneous of the expected degree");
  return v;
}

Vec HomCohomology::global(const std::vector<std::size_t>& idx, const std::vector<Scalar>& v) const {
  Vec out(field_);
  for (std::size_t k = 0; k < idx.size(); ++k) out.add_term(idx[k], v[k]);
  return out;
}

std::vector<int> HomCohomology::degrees() const {
  std::vector<int> out;
  for (const auto& [d, g] : degrees_) {
    if (!g.reps.empty()) out.push_back(d);
  }
  return out;
}

std::size_t HomCohomology::dim(int d) const {
  const Degree* g = at(d);
  return g ? g->reps.size() : 0;
}

std::map<int, std::size_t> HomCohomology::dims() const {
  std::map<int, std::size_t> out;
  for (const auto& [d, g] : degrees_) {
    if (!g.reps.empty()) out[d] = g.reps.size();
  }
  return out;
}

const Vec& HomCohomology::representative(int d, std::size_t k) const {
  const Degree* g = at(d);
  if (!g || k >= g->reps.size()) throw PreconditionError("cohomology class index out of range");
  return g->reps[k];
}

Vec HomCohomology::lift(int d, const Vec& cls) const {
  Vec out(field_);
  for (const auto& [k, coeff] : cls) out.add_scaled(representative(d, k), coeff);
  return out;
}

bool HomCohomology::is_cycle(int d, const Vec& x) const {
  const Degree* g = at(d);
  if (!g) {
    if (!x.is_zero()) throw PreconditionError("element is not homogeneous of the expected degree");
    return true;
  }
  const auto y = g->out_differential.apply(local(*g, x));
  for (const auto& s : y) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::optional<Vec> HomCohomology::classify(int d, const Vec& x) const {
  if (!is_cycle(d, x)) return std::nullopt;
  const Degree* g = at(d);
  Vec out(field_);
  if (!g) return out;
  auto sol = solve(g->split, local(*g, x));
  if (!sol) throw Error("cycle outside boundaries + representatives");
  const std::size_t nb = g->boundaries.size();
  for (std::size_t j = 0; j < g->reps.size(); ++j) out.add_term(j, (*sol)[nb + j]);
  return out;
}

bool HomCohomology::is_boundary(int d, const Vec& x) const {
  auto c = classify(d, x);
  return c && c->is_zero();
}

std::optional<Vec> HomCohomology::primitive(int d, const Vec& x) const {
  const Degree* g = at(d);
  if (!g) {
    if (!x.is_zero()) throw PreconditionError("element is not homogeneous of the expected degree");
    return Vec(field_);
  }
  auto sol = solve(g->in_differential, local(*g, x));
  if (!sol) return std::nullopt;
  auto it = idx_.find(d - 1);
  if (it == idx_.end()) return Vec(field_);
  return global(it->second, *sol);
}

std::vector<Vec> HomCohomology::cycle_basis(int d) const {
  std::vector<Vec> out;
  if (const Degree* g = at(d)) {
    for (const auto& z : g->cycles) out.push_back(global(g->idx, z));
  }
  return out;
}

std::vector<Vec> HomCohomology::boundary_basis(int d) const {
  std::vector<Vec> out;
  if (const Degree* g = at(d)) {
    for (const auto& z : g->boundaries) out.push_back(global(g->idx, z));
  }
  return out;
}

const HomCohomology& CohomologyCache::operator()(std::size_t src, std::size_t dst) const {
  std::lock_guard lock(mu_);
  auto& slot = cache_[{src, dst}];
  if (!slot) slot = std::make_unique<HomCohomology>(c_, src, dst);
  return *slot;
}

CohomologyCategory cohomology_category(const Category& c) {
  auto cache = std::make_shared<CohomologyCache>(c);
  auto h = std::make_shared<AInftyCategory>(c.field(), std::max(3, c.max_arity()));
  const std::size_t n = c.object_count();
  for (std::size_t o = 0; o < n; ++o) h->add_object(c.object_name(o));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const HomCohomology& hc = (*cache)(x, y);
      for (int d : hc.degrees()) {
        std::set<std::string> used;
        for (std::size_t k = 0; k < hc.dim(d); ++k) {
          std::string label = "[" + describe(c, {x, y, d, hc.representative(d, k)}) + "]";
          while (!used.insert(label).second) label += "'";
          h->add_basis(x, y, label, d);
        }
      }
    }
  }
  for (std::size_t o = 0; o < n; ++o) {
    const HomCohomology& hc = (*cache)(o, o);
    if (auto u = hc.unit_class()) {
      h->set_unit(o, h->hom(o, o).indices(0).at(*u));
    } else if (h->hom(o, o).dim() == 0) {
      h->set_zero_unit(o);
    } else {
      throw PreconditionError("unit of " + c.object_name(o) + " does not survive in cohomology");
    }
  }

  // Induced composition on classes; h-basis index for class k of degree d is indices(d)[k].
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const HomCohomology& hf = (*cache)(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        const HomCohomology& hg = (*cache)(y, z);
        const HomCohomology& hz = (*cache)(x, z);
        for (int df : hf.degrees()) {
          for (int dg : hg.degrees()) {
            const auto fi = h->hom(x, y).indices(df);
            const auto gi = h->hom(y, z).indices(dg);
            const auto zi = h->hom(x, z).indices(df + dg);
            for (std::size_t a = 0; a < hg.dim(dg); ++a) {
              const Morphism g{y, z, dg, hg.representative(dg, a)};
              for (std::size_t b = 0; b < hf.dim(df); ++b) {
                const Morphism f{x, y, df, hf.representative(df, b)};
                const Morphism args[2] = {g, f};
                const Morphism p = apply_m(c, args);
                auto cls = hz.classify(df + dg, p.coords);
                if (!cls) throw PreconditionError("composition of cycles is not a cycle");
                Vec out(c.field());
                for (const auto& [k, coeff] : *cls) out.add_term(zi.at(k), coeff);
                h->set_m({Arg{y, z, gi[a]}, Arg{x, y, fi[b]}}, out);
              }
              // Boundaries must compose into boundaries.
              for (const auto& bd : hf.boundary_basis(df)) {
                const Morphism args[2] = {g, {x, y, df, bd}};
                if (!hz.is_boundary(df + dg, apply_m(c, args).coords)) {
                  throw PreconditionError("composition does not descend to cohomology");
                }
              }
            }
            for (std::size_t b = 0; b < hf.dim(df); ++b) {
              const Morphism f{x, y, df, hf.representative(df, b)};
              for (const auto& bd : hg.boundary_basis(dg)) {
                const Morphism args[2] = {{y, z, dg, bd}, f};
                if (!hz.is_boundary(df + dg, apply_m(c, args).coords)) {
                  throw PreconditionError("composition does not descend to cohomology");
                }
              }
            }
          }
        }
      }
    }
  }
  return {h, cache};
}

bool check_formality_witness(const Category& source, const Functor& F, int N) {
  if (N < 3) throw PreconditionError("formality order must be at least 3");
  if (&F.source() != &source) throw PreconditionError("witness does not start at the given category");
  const Category& t = F.target();
  CohomologyCache cache(source);
  const std::size_t n = source.object_count();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const HomCohomology& hc = cache(x, y);
      const GradedSpace& th = t.hom(F.map_object(x), F.map_object(y));
      if (hc.dims() != th.dims()) throw PreconditionError("witness target does not match the cohomology");
    }
  }
  for (std::size_t o = 0; o < t.object_count(); ++o) {
    for (std::size_t p = 0; p < t.object_count(); ++p) {
      for (std::size_t k = 0; k < t.hom(o, p).dim(); ++k) {
        const Arg a{o, p, k};
        if (!t.b(std::span<const Arg>(&a, 1)).is_zero()) {
          throw PreconditionError("witness target is not minimal");
        }
      }
    }
  }
  if (!verify_functor(F).ok()) return false;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const HomCohomology& hc = cache(x, y);
      const GradedSpace& th = t.hom(F.map_object(x), F.map_object(y));
      for (int d : hc.degrees()) {
        const auto ti = th.indices(d);
        for (std::size_t k = 0; k < hc.dim(d); ++k) {
          const Morphism rep{x, y, d, hc.representative(d, k)};
          const Morphism img = apply_f(F, std::span<const Morphism>(&rep, 1));
          if (!(img.coords == Vec::basis(t.field(), ti[k]))) return false;
        }
      }
    }
  }
  for (int i = 3; i <= std::min(N, t.max_arity()); ++i) {
    if (!t.has_arity(i)) continue;
    bool zero = true;
    for_each_chain(t, i, [&](std::span<const Arg> args) {
      if (zero && !t.b(args).is_zero()) zero = false;
    });
    if (!zero) return false;
  }
  return true;
}

}  // namespace ainf
