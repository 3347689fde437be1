#include "ainf/functor.hpp"

#include "ainf/error.hpp"

namespace ainf {

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

int chain_degree(const Category& c, std::span<const Arg> args) {
  int d = 0;
  for (const auto& a : args) d += c.degree(a);
  return d;
}

Morphism functor_output(const Functor& F, std::span<const Arg> args) {
  const Category& s = F.source();
  return {F.map_object(args.back().src), F.map_object(args.front().dst),
          chain_degree(s, args) + 1 - static_cast<int>(args.size()), F.f(args)};
}

// Calls visit(sizes) for every composition of n into positive parts.
template <typename Visit>
void compositions(int n, std::vector<int>& parts, Visit&& visit) {
  if (n == 0) {
    visit(parts);
    return;
  }
  for (int k = 1; k <= n; ++k) {
    parts.push_back(k);
    compositions(n - k, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

Morphism apply_f(const Functor& F, std::span<const Morphism> args) {
  if (args.empty()) throw PreconditionError("empty chain");
  for (std::size_t t = 0; t + 1 < args.size(); ++t) {
    if (args[t].src != args[t + 1].dst) throw PreconditionError("morphisms are not composable");
  }
  int deg = 1 - static_cast<int>(args.size());
  for (const auto& a : args) deg += a.degree;
  Morphism out{F.map_object(args.back().src), F.map_object(args.front().dst), deg, Vec(F.target().field())};
  if (!F.has_arity(static_cast<int>(args.size()))) return out;
  for (const auto& a : args) {
    if (a.is_zero()) return out;
  }
  const std::size_t n = args.size();
  std::vector<Arg> basis(n);
  std::vector<Vec::Map::const_iterator> it(n);
  for (std::size_t t = 0; t < n; ++t) {
    it[t] = args[t].coords.begin();
    basis[t] = {args[t].src, args[t].dst, 0};
  }
  while (true) {
    Scalar coeff(F.target().field(), 1);
    for (std::size_t t = 0; t < n; ++t) {
      basis[t].index = it[t]->first;
      coeff *= it[t]->second;
    }
    out.coords.add_scaled(F.f(basis), coeff);
    std::size_t t = n;
    while (true) {
      --t;
      if (++it[t] != args[t].coords.end()) break;
      it[t] = args[t].coords.begin();
      if (t == 0) return out;
    }
  }
}

TableFunctor::TableFunctor(std::shared_ptr<const Category> source, std::shared_ptr<const Category> target, int arity,
                           std::vector<std::size_t> object_map)
    : source_(std::move(source)), target_(std::move(target)), arity_(arity), object_map_(std::move(object_map)) {
  if (object_map_.size() != source_->object_count()) throw PreconditionError("object map has the wrong size");
  for (auto o : object_map_) {
    if (o >= target_->object_count()) throw PreconditionError("object map points outside the target");
  }
  if (source_->field() != target_->field()) throw PreconditionError("functor between categories over different fields");
}

void TableFunctor::set_g(std::vector<Arg> args, Vec value) {
  check_chain(args);
  const int i = static_cast<int>(args.size());
  if (i > arity_) throw PreconditionError("component arity exceeds the functor arity");
  const int deg = chain_degree(*source_, args) + 1 - i;
  const auto& out = target_->hom(map_object(args.back().src), map_object(args.front().dst));
  for (const auto& [idx, c] : value) {
    if (idx >= out.dim() || out.degree_of(idx) != deg) {
      throw PreconditionError("g_" + std::to_string(i) + " entry " + describe_chain(*source_, args) +
                              " does not have degree " + std::to_string(deg));
    }
  }
  auto it = table_.find(args);
  if (it != table_.end()) {
    table_.erase(it);
    --arity_entries_[i];
  }
  if (!value.is_zero()) {
    table_.emplace(std::move(args), std::move(value));
    ++arity_entries_[i];
  }
}

Vec TableFunctor::g(std::span<const Arg> args) const {
  auto it = table_.find(std::vector<Arg>(args.begin(), args.end()));
  if (it == table_.end()) return Vec(target_->field());
  return it->second;
}

Vec TableFunctor::f(std::span<const Arg> args) const {
  if (static_cast<int>(args.size()) > arity_) return Vec(target_->field());
  Vec z = g(args);
  if (z.is_zero()) return z;
  std::vector<int> deg;
  for (const auto& a : args) deg.push_back(source_->degree(a));
  return functor_shift_sign(deg) < 0 ? -z : z;
}

bool TableFunctor::has_arity(int i) const {
  if (i < 1 || i > arity_) return false;
  auto it = arity_entries_.find(i);
  return it != arity_entries_.end() && it->second > 0;
}

Vec IdentityFunctor::f(std::span<const Arg> args) const {
  if (args.size() != 1) return Vec(c_->field());
  return Vec::basis(c_->field(), args[0].index);
}

CompositeFunctor::CompositeFunctor(std::shared_ptr<const Functor> g, std::shared_ptr<const Functor> f)
    : g_(std::move(g)), f_(std::move(f)) {
  if (&f_->target() != &g_->source()) throw PreconditionError("functors are not composable");
}

Vec CompositeFunctor::f(std::span<const Arg> args) const {
  const int n = static_cast<int>(args.size());
  Vec total(target().field());
  if (n > arity()) return total;
  std::vector<int> parts;
  compositions(n, parts, [&](const std::vector<int>& sizes) {
    if (!g_->has_arity(static_cast<int>(sizes.size()))) return;
    std::vector<Morphism> inner;
    std::size_t pos = 0;
    for (int k : sizes) {
      if (!f_->has_arity(k)) return;
      inner.push_back(functor_output(*f_, args.subspan(pos, k)));
      if (inner.back().is_zero()) return;
      pos += k;
    }
    total += apply_f(*g_, inner).coords;
  });
  return total;
}

std::shared_ptr<const Functor> compose_functors(std::shared_ptr<const Functor> g, std::shared_ptr<const Functor> f) {
  return std::make_shared<CompositeFunctor>(std::move(g), std::move(f));
}

namespace {

// Σ_{j+k+l=n} ± F_{j+1+l}(left, B_k(mid), right) with source operations.
Vec functor_lhs(const Functor& F, std::span<const Arg> args) {
  const Category& s = F.source();
  const int n = static_cast<int>(args.size());
  Vec total(F.target().field());
  std::vector<Arg> outer;
  for (int k = 1; k <= n; ++k) {
    if (!s.has_arity(k) || !F.has_arity(n - k + 1)) continue;
    long left_shifted = 0;
    for (int j = 0; j + k <= n; ++j) {
      if (j > 0) left_shifted += s.degree(args[j - 1]) - 1;
      const Vec inner = s.b(args.subspan(j, k));
      if (inner.is_zero()) continue;
      outer.assign(args.begin(), args.begin() + j);
      outer.push_back({args[j + k - 1].src, args[j].dst, 0});
      outer.insert(outer.end(), args.begin() + j + k, args.end());
      const bool neg = parity_sign(left_shifted) < 0;
      for (const auto& [idx, coeff] : inner) {
        outer[j].index = idx;
        total.add_scaled(F.f(outer), neg ? -coeff : coeff);
      }
    }
  }
  return total;
}

// Σ B'_r(F_{i_1}, ..., F_{i_r}) with target operations; r = max_r excluded when skip_top.
Vec functor_rhs(const Functor& F, std::span<const Arg> args, bool skip_top) {
  const Category& t = F.target();
  const int n = static_cast<int>(args.size());
  Vec total(t.field());
  std::vector<int> parts;
  compositions(n, parts, [&](const std::vector<int>& sizes) {
    const int r = static_cast<int>(sizes.size());
    if (skip_top && r == n) return;
    if (!t.has_arity(r)) return;
    std::vector<Morphism> inner;
    std::size_t pos = 0;
    for (int k : sizes) {
      if (!F.has_arity(k)) return;
      inner.push_back(functor_output(F, args.subspan(pos, k)));
      if (inner.back().is_zero()) return;
      pos += k;
    }
    total += apply_b(t, inner).coords;
  });
  return total;
}

}  // namespace

Vec functor_residual(const Functor& F, std::span<const Arg> args) {
  check_chain(args);
  return functor_lhs(F, args) - functor_rhs(F, args, false);
}

Report verify_functor(const Functor& F, int up_to_arity) {
  Report r;
  const Category& s = F.source();
  const Category& t = F.target();
  const int top = std::min(up_to_arity, F.arity());
  r.checked_up_to = top;

  for (std::size_t o = 0; o < s.object_count(); ++o) {
    auto u = s.unit(o);
    auto tu = t.unit(F.map_object(o));
    if (!u || !tu) continue;
    ++r.checks;
    Morphism id{o, o, 0, *u};
    Morphism img = apply_f(F, std::span<const Morphism>(&id, 1));
    if (!(img.coords == *tu)) {
      r.add_failure({1, {}, img.coords - *tu, "f_1(id_" + s.object_name(o) + ") is not a unit"});
    }
    for (int i = 2; i <= top; ++i) {
      for (int pos = 0; pos < i; ++pos) {
        for_each_chain(s, i - 1, [&](std::span<const Arg> rest) {
          const std::size_t obj = pos < i - 1 ? rest[pos].dst : rest[pos - 1].src;
          if (obj != o) return;
          std::vector<Morphism> ms;
          for (int q = 0; q < pos; ++q) ms.push_back(basis_morphism(s, rest[q]));
          ms.push_back(id);
          for (int q = pos; q < i - 1; ++q) ms.push_back(basis_morphism(s, rest[q]));
          ++r.checks;
          Morphism v = apply_f(F, ms);
          if (!v.is_zero()) {
            r.add_failure({i, {rest.begin(), rest.end()}, v.coords, "higher component nonzero on a unit"});
          }
        });
      }
    }
  }

  for (int i = 1; i <= top; ++i) {
    for_each_chain(s, i, [&](std::span<const Arg> args) {
      ++r.checks;
      Vec v = functor_residual(F, args);
      if (!v.is_zero()) r.add_failure({i, {args.begin(), args.end()}, std::move(v), "functor relation"});
    });
  }
  if (r.verdict == Verdict::pass && up_to_arity > F.arity()) r.verdict = Verdict::unknown;
  return r;
}

namespace {

Scalar random_unit(FieldSpec field, std::mt19937_64& rng, int range) {
  while (true) {
    const long v = static_cast<long>(rng() % (2 * range + 1)) - range;
    Scalar s(field, v);
    if (!s.is_zero()) return s;
  }
}

bool uniform_below(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

TransportedStructure random_transported_functor(std::shared_ptr<const AInftyCategory> source, int m,
                                                std::mt19937_64& rng, const RandomFunctorOptions& opts) {
  if (source->max_arity() < m) throw PreconditionError("source max_arity is below the functor arity");
  const FieldSpec field = source->field();
  auto target = std::make_shared<AInftyCategory>(field, m);
  for (std::size_t o = 0; o < source->object_count(); ++o) target->add_object(source->object_name(o));
  for (std::size_t x = 0; x < source->object_count(); ++x) {
    for (std::size_t y = 0; y < source->object_count(); ++y) {
      for (const auto& b : source->hom(x, y).basis()) target->add_basis(x, y, b.label, b.degree);
    }
  }
  for (std::size_t o = 0; o < source->object_count(); ++o) {
    if (auto u = source->unit_index(o)) target->set_unit(o, *u);
  }
  std::vector<std::size_t> objects(source->object_count());
  for (std::size_t o = 0; o < objects.size(); ++o) objects[o] = o;
  auto F = std::make_shared<TableFunctor>(source, target, m, objects);

  auto is_unit = [&](const Arg& a) {
    return a.src == a.dst && source->unit_index(a.src) && *source->unit_index(a.src) == a.index;
  };

  // First component: diagonal, units fixed.
  std::map<Arg, Scalar> lambda;
  for (std::size_t x = 0; x < source->object_count(); ++x) {
    for (std::size_t y = 0; y < source->object_count(); ++y) {
      for (std::size_t k = 0; k < source->hom(x, y).dim(); ++k) {
        const Arg a{x, y, k};
        Scalar l = is_unit(a) ? Scalar(field, 1) : random_unit(field, rng, opts.range);
        lambda.emplace(a, l);
        Vec v(field);
        v.add_term(k, l);
        F->set_g({a}, v);
      }
    }
  }
  // Higher components: random, vanishing on units.
  for (int i = 2; i <= m; ++i) {
    for_each_chain(*source, i, [&](std::span<const Arg> args) {
      for (const auto& a : args) {
        if (is_unit(a)) return;
      }
      if (!uniform_below(rng, opts.density)) return;
      const int deg = chain_degree(*source, args) + 1 - i;
      const auto candidates = target->hom(args.back().src, args.front().dst).indices(deg);
      if (candidates.empty()) return;
      Vec v(field);
      v.add_term(candidates[rng() % candidates.size()], random_unit(field, rng, opts.range));
      F->set_g({args.begin(), args.end()}, v);
    });
  }
  // Target operations arity by arity: Π λ · B'_n(e) = LHS_n(e) - Σ_{r<n} (...).
  for (int n = 1; n <= m; ++n) {
    std::vector<std::pair<std::vector<Arg>, Vec>> entries;
    for_each_chain(*source, n, [&](std::span<const Arg> args) {
      Vec rhs = functor_lhs(*F, args) - functor_rhs(*F, args, true);
      if (rhs.is_zero()) return;
      Scalar prod(field, 1);
      std::vector<int> deg;
      for (const auto& a : args) {
        prod *= lambda.at(a);
        deg.push_back(source->degree(a));
      }
      Scalar factor = prod.inverse();
      if (b_to_m_sign(deg) < 0) factor = -factor;
      entries.emplace_back(std::vector<Arg>(args.begin(), args.end()), rhs.scaled(factor));
    });
    for (auto& [args, v] : entries) target->set_m(std::move(args), std::move(v));
  }
  return {target, F};
}

}  // namespace ainf
