#include "ainf/category.hpp"

#include <algorithm>
#include <sstream>

#include "ainf/error.hpp"

namespace ainf {

namespace {

constexpr std::size_t kStoredFailures = 16;

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// Expands the multilinear evaluation of `op` over the supports of args.
template <typename Op>
Vec expand(const Category& c, std::span<const Morphism> args, Op op) {
  Vec out(c.field());
  const std::size_t n = args.size();
  std::vector<Arg> basis(n);
  std::vector<Vec::Map::const_iterator> it(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (args[t].coords.is_zero()) return out;
    it[t] = args[t].coords.begin();
    basis[t] = {args[t].src, args[t].dst, 0};
  }
  while (true) {
    Scalar coeff(c.field(), 1);
    for (std::size_t t = 0; t < n; ++t) {
      basis[t].index = it[t]->first;
      coeff *= it[t]->second;
    }
    out.add_scaled(op(std::span<const Arg>(basis)), coeff);
    std::size_t t = n;
    while (t > 0) {
      --t;
      if (++it[t] != args[t].coords.end()) break;
      it[t] = args[t].coords.begin();
      if (t == 0) return out;
    }
  }
}

void check_morphism_chain(std::span<const Morphism> args) {
  if (args.empty()) throw PreconditionError("empty chain");
  for (std::size_t t = 0; t + 1 < args.size(); ++t) {
    if (args[t].src != args[t + 1].dst) throw PreconditionError("morphisms are not composable");
  }
}

}  // namespace

Vec Category::m(std::span<const Arg> args) const {
  std::vector<int> deg;
  deg.reserve(args.size());
  for (const auto& a : args) deg.push_back(degree(a));
  Vec z = b(args);
  return b_to_m_sign(deg) < 0 ? -z : z;
}

std::optional<std::size_t> Category::find_object(std::string_view name) const {
  for (std::size_t i = 0; i < object_count(); ++i) {
    if (object_name(i) == name) return i;
  }
  return std::nullopt;
}

void check_chain(std::span<const Arg> args) {
  if (args.empty()) throw PreconditionError("empty chain");
  for (std::size_t t = 0; t + 1 < args.size(); ++t) {
    if (args[t].src != args[t + 1].dst) throw PreconditionError("chain is not composable");
  }
}

int b_to_m_sign(std::span<const int> degrees) {
  const long i = static_cast<long>(degrees.size());
  long e = 1 + (i - 1);
  for (long t = 0; t < i; ++t) e += (i - 1 - t) * degrees[t];
  return parity_sign(e);
}

int functor_shift_sign(std::span<const int> degrees) {
  const long i = static_cast<long>(degrees.size());
  long e = 0;
  for (long t = 0; t < i; ++t) e += (i - 1 - t) * (degrees[t] - 1);
  return parity_sign(e);
}

Morphism zero_morphism(const Category& c, std::size_t src, std::size_t dst, int degree) {
  return {src, dst, degree, Vec(c.field())};
}

Morphism basis_morphism(const Category& c, const Arg& a) {
  return {a.src, a.dst, c.degree(a), Vec::basis(c.field(), a.index)};
}

Morphism unit_morphism(const Category& c, std::size_t obj) {
  auto u = c.unit(obj);
  if (!u) throw PreconditionError("object " + c.object_name(obj) + " has no unit");
  return {obj, obj, 0, *u};
}

Morphism apply_b(const Category& c, std::span<const Morphism> args) {
  check_morphism_chain(args);
  int deg = 2 - static_cast<int>(args.size());
  for (const auto& a : args) deg += a.degree;
  Morphism out{args.back().src, args.front().dst, deg, Vec(c.field())};
  if (!c.has_arity(static_cast<int>(args.size()))) return out;
  out.coords = expand(c, args, [&](std::span<const Arg> a) { return c.b(a); });
  return out;
}

Morphism apply_m(const Category& c, std::span<const Morphism> args) {
  check_morphism_chain(args);
  int deg = 2 - static_cast<int>(args.size());
  for (const auto& a : args) deg += a.degree;
  Morphism out{args.back().src, args.front().dst, deg, Vec(c.field())};
  if (!c.has_arity(static_cast<int>(args.size()))) return out;
  out.coords = expand(c, args, [&](std::span<const Arg> a) { return c.m(a); });
  return out;
}

namespace {

// args[t] : objs[t+1] → objs[t]; objects are chosen from the source end.
void chains_rec(const Category& c, std::vector<std::size_t>& objs, std::vector<Arg>& args, int pos,
                std::optional<std::size_t> dst, const std::function<void(std::span<const Arg>)>& f) {
  if (pos < 0) {
    f(std::span<const Arg>(args));
    return;
  }
  const std::size_t src = objs[pos + 1];
  auto visit = [&](std::size_t d) {
    const auto& h = c.hom(src, d);
    if (h.dim() == 0) return;
    objs[pos] = d;
    for (std::size_t k = 0; k < h.dim(); ++k) {
      args[pos] = {src, d, k};
      chains_rec(c, objs, args, pos - 1, dst, f);
    }
  };
  if (pos == 0 && dst) {
    visit(*dst);
  } else {
    for (std::size_t d = 0; d < c.object_count(); ++d) visit(d);
  }
}

}  // namespace

void for_each_chain(const Category& c, int arity, const std::function<void(std::span<const Arg>)>& f) {
  if (arity < 1) return;
  std::vector<std::size_t> objs(arity + 1);
  std::vector<Arg> args(arity);
  for (std::size_t s = 0; s < c.object_count(); ++s) {
    objs[arity] = s;
    chains_rec(c, objs, args, arity - 1, std::nullopt, f);
  }
}

void for_each_chain(const Category& c, int arity, std::size_t src, std::size_t dst,
                    const std::function<void(std::span<const Arg>)>& f) {
  if (arity < 1) return;
  std::vector<std::size_t> objs(arity + 1);
  std::vector<Arg> args(arity);
  objs[arity] = src;
  chains_rec(c, objs, args, arity - 1, dst, f);
}

namespace {

// Σ_{j+k+l=i} ± op_{j+1+l}(x_left, op_k(x_mid), x_right); `sign` gets (j, k, l, Σ_left |x|, Σ_left (|x|-1)).
template <typename Op, typename Sign>
Vec relation_residual(const Category& c, std::span<const Arg> args, Op op, Sign sign) {
  const int i = static_cast<int>(args.size());
  Vec total(c.field());
  std::vector<Arg> outer;
  outer.reserve(i);
  for (int k = 1; k <= i; ++k) {
    if (!c.has_arity(k)) continue;
    const int outer_arity = i - k + 1;
    if (!c.has_arity(outer_arity)) continue;
    long left_deg = 0;
    for (int j = 0; j + k <= i; ++j) {
      if (j > 0) left_deg += c.degree(args[j - 1]);
      const int l = i - j - k;
      const Vec inner = op(args.subspan(j, k));
      if (inner.is_zero()) continue;
      const int s = sign(j, k, l, left_deg, left_deg - j);
      const std::size_t isrc = args[j + k - 1].src;
      const std::size_t idst = args[j].dst;
      outer.assign(args.begin(), args.begin() + j);
      outer.push_back({isrc, idst, 0});
      outer.insert(outer.end(), args.begin() + j + k, args.end());
      for (const auto& [idx, coeff] : inner) {
        outer[j].index = idx;
        const Vec v = op(std::span<const Arg>(outer));
        total.add_scaled(v, s < 0 ? -coeff : coeff);
      }
    }
  }
  return total;
}

}  // namespace

Vec relation_residual_b(const Category& c, std::span<const Arg> args) {
  check_chain(args);
  return relation_residual(
      c, args, [&](std::span<const Arg> a) { return c.b(a); },
      [](int, int, int, long, long left_shifted) { return parity_sign(left_shifted); });
}

Vec relation_residual_m(const Category& c, std::span<const Arg> args) {
  check_chain(args);
  return relation_residual(
      c, args, [&](std::span<const Arg> a) { return c.m(a); },
      [](int j, int k, int l, long left_deg, long) { return parity_sign(j + long(k) * l + long(k) * left_deg); });
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

void Report::add_failure(Failure f) {
  verdict = Verdict::fail;
  ++failure_count;
  if (failures.size() < kStoredFailures) failures.push_back(std::move(f));
}

namespace {

template <typename Residual>
Report verify_with(const Category& c, int up_to, Residual residual) {
  Report r;
  const int top = std::min(up_to, c.max_arity());
  for (int i = 1; i <= top; ++i) {
    for_each_chain(c, i, [&](std::span<const Arg> args) {
      ++r.checks;
      Vec v = residual(c, args);
      if (!v.is_zero()) r.add_failure({i, {args.begin(), args.end()}, std::move(v), "relation"});
    });
  }
  r.checked_up_to = top;
  if (r.verdict == Verdict::pass && up_to > c.max_arity()) r.verdict = Verdict::unknown;
  return r;
}

}  // namespace

Report verify_relations(const Category& c, int up_to_arity) {
  return verify_with(c, up_to_arity, relation_residual_b);
}

Report verify_relations_m(const Category& c, int up_to_arity) {
  return verify_with(c, up_to_arity, relation_residual_m);
}

Report verify_units(const Category& c) { return verify_units(c, c.max_arity()); }

Report verify_units(const Category& c, int up_to_arity) {
  Report r;
  const int top = std::min(up_to_arity, c.max_arity());
  r.checked_up_to = top;
  std::vector<Morphism> units;
  for (std::size_t o = 0; o < c.object_count(); ++o) {
    auto u = c.unit(o);
    if (!u) {
      r.add_failure({0, {}, Vec(c.field()), "object " + c.object_name(o) + " has no unit"});
      units.push_back(zero_morphism(c, o, o, 0));
    } else {
      units.push_back({o, o, 0, *u});
    }
  }
  if (r.verdict == Verdict::fail) return r;

  for (int i = 1; i <= top; ++i) {
    // Chains of arity i-1 with the unit inserted at each position.
    for (int pos = 0; pos < i; ++pos) {
      auto check = [&](std::span<const Arg> rest, std::size_t obj) {
        std::vector<Morphism> ms;
        ms.reserve(i);
        for (int t = 0; t < pos; ++t) ms.push_back(basis_morphism(c, rest[t]));
        ms.push_back(units[obj]);
        for (int t = pos; t < i - 1; ++t) ms.push_back(basis_morphism(c, rest[t]));
        ++r.checks;
        Morphism got = apply_b(c, ms);
        Vec expected(c.field());
        if (i == 2) {
          const Morphism& other = ms[pos == 0 ? 1 : 0];
          expected = other.coords;
          if (pos == 1 && other.degree % 2 != 0) expected = -expected;
        }
        if (!(got.coords == expected)) {
          Vec diff = got.coords - expected;
          r.add_failure({i, {rest.begin(), rest.end()}, std::move(diff), "unit at position " + std::to_string(pos)});
        }
      };
      if (i == 1) {
        for (std::size_t o = 0; o < c.object_count(); ++o) check({}, o);
        continue;
      }
      for_each_chain(c, i - 1, [&](std::span<const Arg> rest) {
        // Unit sits between rest[pos-1] and rest[pos].
        const std::size_t obj = pos < i - 1 ? rest[pos].dst : rest[pos - 1].src;
        check(rest, obj);
      });
    }
  }
  return r;
}

std::string describe_chain(const Category& c, std::span<const Arg> args) {
  std::ostringstream os;
  os << "(";
  for (std::size_t t = 0; t < args.size(); ++t) {
    if (t) os << ", ";
    os << c.hom(args[t].src, args[t].dst)[args[t].index].label;
  }
  os << ")";
  return os.str();
}

std::string describe(const Category& c, const Morphism& x) {
  if (x.coords.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& h = c.hom(x.src, x.dst);
  for (const auto& [idx, coeff] : x.coords) {
    if (!first) os << " + ";
    first = false;
    if (!coeff.is_one()) os << coeff << "*";
    os << h[idx].label;
  }
  return os.str();
}

}  // namespace ainf
