#include "ainf/fixtures.hpp"

#include <random>

#include "ainf/error.hpp"

namespace ainf {

namespace {

void gate(const AInftyCategory& c, const std::string& name) {
  const Report u = verify_units(c);
  if (!u.ok()) throw Error(name + ": unit axioms fail");
  const Report r = verify_relations(c, c.max_arity());
  if (!r.ok()) throw Error(name + ": A-infinity relations fail at arity " + std::to_string(r.failures.front().arity));
}

Arg basis_of(const AInftyCategory& c, std::size_t x, std::size_t y, const std::string& label) {
  auto a = c.find_basis(x, y, label);
  if (!a) throw Error("missing basis vector " + label);
  return *a;
}

}  // namespace

std::shared_ptr<AInftyCategory> quiver_massey_fixture(FieldSpec field, int max_arity) {
  auto c = std::make_shared<AInftyCategory>(field, max_arity);
  const auto A = c->add_object("A");
  const auto B = c->add_object("B");
  const auto C = c->add_object("C");
  const auto D = c->add_object("D");
  c->add_basis(A, B, "f0", 0);
  c->add_basis(B, C, "g0", 0);
  c->add_basis(C, D, "h0", 0);
  c->add_basis(A, D, "c", -1);
  c->complete_units();
  if (max_arity >= 3) {
    c->set_m({basis_of(*c, C, D, "h0"), basis_of(*c, B, C, "g0"), basis_of(*c, A, B, "f0")},
             Vec::basis(field, basis_of(*c, A, D, "c").index));
  }
  gate(*c, "quiver_massey");
  return c;
}

std::shared_ptr<AInftyCategory> poly_fixture(int N, int d, FieldSpec field, int max_arity) {
  if (N < 7 || N % 2 == 0) throw PreconditionError("poly fixture needs an odd N >= 7");
  if (d < 2) throw PreconditionError("poly fixture needs truncation order d >= 2");
  auto c = std::make_shared<AInftyCategory>(field, max_arity);
  const auto O = c->add_object("O");
  for (int k = 0; k < d; ++k) {
    c->add_basis(O, O, k == 0 ? "1" : (k == 1 ? "t" : "t^" + std::to_string(k)), k * (1 - N));
  }
  c->set_unit(O, 0);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      if (a + b < d) c->set_m({Arg{O, O, std::size_t(a)}, Arg{O, O, std::size_t(b)}}, Vec::basis(field, a + b));
    }
  }
  gate(*c, "poly");
  return c;
}

std::shared_ptr<AInftyCategory> arrow_fixture(int N, FieldSpec field, int max_arity) {
  if (N < 4) throw PreconditionError("arrow fixture needs N >= 4");
  auto c = std::make_shared<AInftyCategory>(field, max_arity);
  const auto A = c->add_object("A");
  const auto B = c->add_object("B");
  c->add_basis(A, B, "x0", 0);
  c->add_basis(A, B, "x" + std::to_string(N), -N);
  c->complete_units();
  gate(*c, "arrow");
  return c;
}

std::shared_ptr<AInftyCategory> dg_pair_fixture(FieldSpec field, int max_arity) {
  auto c = std::make_shared<AInftyCategory>(field, max_arity);
  const auto X = c->add_object("X");
  const auto Y = c->add_object("Y");
  c->add_basis(X, Y, "p", -1);
  c->add_basis(X, Y, "q", 0);
  c->add_basis(X, Y, "r", 0);
  c->complete_units();
  c->set_m({basis_of(*c, X, Y, "p")}, Vec::basis(field, basis_of(*c, X, Y, "q").index));
  gate(*c, "dg_pair");
  return c;
}

namespace {

bool draw(std::mt19937_64& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

int draw_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Scalar draw_coeff(FieldSpec field, std::mt19937_64& rng) {
  while (true) {
    Scalar s(field, draw_int(rng, -3, 3));
    if (!s.is_zero()) return s;
  }
}

std::shared_ptr<AInftyCategory> sample(std::mt19937_64& rng, FieldSpec field, const RandomBounds& b) {
  auto c = std::make_shared<AInftyCategory>(field, b.max_arity);
  const int n = b.objects;
  for (int o = 0; o < n; ++o) c->add_object(std::string(1, static_cast<char>('P' + o)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || (y < x && !b.allow_backward)) continue;
      if (!draw(rng, b.hom_density)) continue;
      const int dim = draw_int(rng, 1, b.max_hom_dim);
      for (int k = 0; k < dim; ++k) {
        c->add_basis(x, y, "e" + std::to_string(x) + std::to_string(y) + "_" + std::to_string(k),
                     draw_int(rng, b.min_degree, b.max_degree));
      }
    }
  }
  c->complete_units();
  for (int i = 2; i <= b.max_arity; ++i) {
    std::vector<std::pair<std::vector<Arg>, Vec>> entries;
    for_each_chain(*c, i, [&](std::span<const Arg> args) {
      for (const auto& a : args) {
        if (a.src == a.dst) return;  // units and nothing else live on the diagonal
      }
      int deg = 2 - i;
      for (const auto& a : args) deg += c->degree(a);
      const auto cand = c->hom(args.back().src, args.front().dst).indices(deg);
      if (cand.empty() || !draw(rng, b.op_density)) return;
      Vec v(field);
      v.add_term(cand[rng() % cand.size()], draw_coeff(field, rng));
      entries.emplace_back(std::vector<Arg>(args.begin(), args.end()), v);
    });
    for (auto& [args, v] : entries) c->set_m(std::move(args), std::move(v));
  }
  return c;
}

}  // namespace

std::shared_ptr<AInftyCategory> random_minimal_category(std::uint64_t seed, const RandomBounds& bounds) {
  if (bounds.objects < 1 || bounds.objects > 4 || bounds.max_hom_dim < 1 || bounds.max_hom_dim > 3 ||
      bounds.max_arity < 2 || bounds.max_arity > 5 || bounds.min_degree > bounds.max_degree) {
    throw PreconditionError("random category bounds out of range");
  }
  std::mt19937_64 rng(seed);
  const FieldSpec field = bounds.field;
  for (int attempt = 0; attempt < bounds.attempts; ++attempt) {
    auto c = sample(rng, field, bounds);
    if (verify_relations(*c, c->max_arity()).ok() && verify_units(*c).ok()) return c;
  }
  throw Error("random_minimal_category: no valid sample within " + std::to_string(bounds.attempts) + " attempts");
}

std::vector<std::string> fixture_names() { return {"quiver_massey", "poly", "arrow", "dg_pair", "random"}; }

std::shared_ptr<AInftyCategory> make_fixture(const std::string& name, const FixtureParams& p) {
  if (name == "quiver_massey") return quiver_massey_fixture(p.field, p.max_arity);
  if (name == "poly") return poly_fixture(p.N, p.d, p.field, p.max_arity);
  if (name == "arrow") return arrow_fixture(p.N, p.field, p.max_arity);
  if (name == "dg_pair") return dg_pair_fixture(p.field, p.max_arity);
  if (name == "random") {
    RandomBounds b;
    b.max_arity = std::min(p.max_arity, 5);
    b.field = p.field;
    return random_minimal_category(p.seed, b);
  }
  throw PreconditionError("unknown fixture '" + name + "'");
}

}  // namespace ainf
