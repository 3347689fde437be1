// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "ainf/cli.hpp"
#include "ainf/directed.hpp"
#include "ainf/error.hpp"
#include "ainf/fixtures.hpp"
#include "ainf/io.hpp"
#include "ainf/massey.hpp"
#include "oracles.hpp"
#include "samplers.hpp"

using namespace ainf;

namespace {

const FieldSpec Q = FieldSpec::rationals();

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string first_problem;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) first_problem = what;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<std::shared_ptr<AInftyCategory>> named_fixtures(FieldSpec field = Q) {
  return {quiver_massey_fixture(field), poly_fixture(7, 4, field), arrow_fixture(5, field)};
}

std::vector<std::shared_ptr<AInftyCategory>> all_fixtures(FieldSpec field = Q) {
  auto out = named_fixtures(field);
  out.push_back(dg_pair_fixture(field));
  for (std::uint64_t s = 0; s < 4; ++s) {
    RandomBounds b;
    b.field = field;
    out.push_back(random_minimal_category(s, b));
  }
  return out;
}

// Tw categories over every fixture: the quiver family and singletons with desuspensions.
std::vector<std::shared_ptr<TwCategory>> tw_families(FieldSpec field = Q) {
  std::vector<std::shared_ptr<TwCategory>> out{sample::quiver_tw(field).tw};
  const auto fixtures = all_fixtures(field);
  for (std::size_t k = 1; k < fixtures.size(); ++k) out.push_back(sample::with_desuspensions(fixtures[k]));
  for (std::size_t k = 0; k < fixtures.size(); ++k) out.push_back(sample::shifted_with_cones(fixtures[k], 17 + k));
  return out;
}

// --- 1 -------------------------------------------------------------------

Outcome relation_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t checks = 0;
  for (const auto& c : named_fixtures()) {
    const Report r = verify_relations(*c, 6);
    const Report u = verify_units(*c, 6);
    checks += r.checks + u.checks;
    o.require(r.ok() && u.ok(), "fixture relations");
  }
  auto qt = sample::quiver_tw();
  const Report r = verify_relations(*qt.tw, 6);
  const Report u = verify_units(*qt.tw, 6);
  checks += r.checks + u.checks;
  o.require(r.ok() && u.ok(), "Tw(quiver) relations");
  const double elapsed = seconds_since(t0);
  o.require(elapsed <= 60.0, "runtime above 60 s");

  // Second expansion, on valid and on unchecked random tables.
  std::size_t tuples = 0, nonzero = 0;
  std::vector<std::shared_ptr<AInftyCategory>> cats = named_fixtures();
  for (std::uint64_t s = 0; s < 6; ++s) cats.push_back(random_minimal_category(s));
  for (std::uint64_t s = 0; s < 12; ++s) cats.push_back(oracle::random_table(100 + s, 2 + static_cast<int>(s % 3), 4));
  for (const auto& c : cats) {
    for (int i = 1; i <= std::min(c->max_arity(), 5); ++i) {
      for_each_chain(*c, i, [&](std::span<const Arg> a) {
        const Vec expect = oracle::m_relation(*c, a);
        ++tuples;
        nonzero += !expect.is_zero();
        o.require(relation_residual_m(*c, a) == expect, "m-side expansion disagrees at " + describe_chain(*c, a));
      });
    }
  }
  o.detail << checks << " checks in " << elapsed << " s (" << qt.tw->object_count() << " Tw objects, up to 3 summands); "
           << tuples << " tuples against the second expansion, " << nonzero << " with nonzero residual";
  return o;
}

// --- 2 -------------------------------------------------------------------

Scalar parity_scalar(int e) { return Scalar(Q, e % 2 == 0 ? 1 : -1); }

Outcome sign_conventions() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& c : all_fixtures()) {
    for (int i = 1; i <= 3; ++i) {
      for_each_chain(*c, i, [&](std::span<const Arg> a) {
        Scalar s(Q, -1);
        if (i == 2) s = parity_scalar(c->degree(a[0]));
        if (i == 3) s = -parity_scalar(c->degree(a[1]));
        o.require(c->b(a) == c->m(a).scaled(s), "b/m sign at " + describe_chain(*c, a));
        ++n;
      });
    }
  }
  o.detail << n << " basis tuples of arity 1-3";

  // Σ(σ^a f) = (-1)^a σ^a f on every basis morphism of Tw(quiver).
  auto qt = sample::quiver_tw();
  const TwCategory& T = *qt.tw;
  std::vector<TwObject> shifted;
  for (const auto& x : T.objects()) shifted.push_back(shift_object(x));
  const TwCategory S(qt.base, shifted);
  std::size_t maps = 0;
  for_each_chain(T, 1, [&](std::span<const Arg> a) {
    const Morphism f = basis_morphism(T, a[0]);
    const auto p = T.position(a[0].src, a[0].dst, a[0].index);
    const int off = T.object(a[0].dst).summands[p.row].shift - T.object(a[0].src).summands[p.col].shift;
    const Morphism sf = shift_morphism(T, f, S, a[0].src, a[0].dst);
    Vec expect(Q);
    expect.add_term(S.index(a[0].src, a[0].dst, p.row, p.col, p.k), parity_scalar(off));
    o.require(sf.coords == expect, "shift sign on " + describe(T, f));
    ++maps;
  });

  // s_{ΣA} = -Σ s_A on every hom space of every fixture.
  std::size_t spaces = 0;
  for (const auto& c : all_fixtures()) {
    for (std::size_t x = 0; x < c->object_count(); ++x) {
      for (std::size_t y = 0; y < c->object_count(); ++y) {
        const GradedSpace& A = c->hom(x, y);
        const GradedMap lhs = degree_change(Q, shift_space(A, 1), 1);
        const GradedMap rhs = shift_map(degree_change(Q, A, 1));
        o.require(lhs.domain() == rhs.domain() && lhs.codomain() == rhs.codomain() &&
                      lhs.total_matrix() == rhs.total_matrix().scaled(Scalar(Q, -1)),
                  "suspension identity");
        ++spaces;
      }
    }
  }
  o.detail << "; shift sign on " << maps << " Tw basis maps; s_{ΣA} = -Σ s_A on " << spaces << " hom spaces";
  return o;
}

// --- 3 -------------------------------------------------------------------

Outcome cones() {
  Outcome o;
  std::mt19937_64 rng(301);
  const auto families = tw_families();
  std::size_t sampled = 0, nonzero = 0;
  while (sampled < 100) {
    const auto& T = families[sampled % families.size()];
    const std::size_t n = T->object_count();
    CohomologyCache H(*T);
    const std::size_t x = rng() % n, y = rng() % n;
    const Morphism f = sample::random_cycle(H, x, y, 0, rng);
    const ConeData cd = cone(*T, f);
    o.require(verify_maurer_cartan(T->base(), cd.cone).ok(), "cone fails Maurer-Cartan: " + cd.cone.name);
    nonzero += !f.is_zero();
    ++sampled;
  }
  o.detail << sampled << " cones (" << nonzero << " of nonzero maps) satisfy Maurer-Cartan";

  std::size_t identities = 0, homs = 0;
  for (const auto& T : families) {
    std::vector<TwObject> extra;
    for (std::size_t x = 0; x < T->object_count(); ++x) extra.push_back(cone(*T, unit_morphism(*T, x)).cone);
    auto T2 = T->with_objects(extra);
    const std::size_t first = T->object_count();
    for (std::size_t c = first; c < T2->object_count(); ++c) {
      ++identities;
      for (std::size_t y = 0; y < T2->object_count(); ++y) {
        o.require(oracle::cohomology_dim(*T2, c, y, 0) == 0, "H^0 out of " + T2->object_name(c));
        o.require(oracle::cohomology_dim(*T2, y, c, 0) == 0, "H^0 into " + T2->object_name(c));
        homs += 2;
      }
    }
  }
  o.detail << "; C(id) for " << identities << " objects, " << homs << " H^0 homs vanish";
  return o;
}

// --- 4 -------------------------------------------------------------------

Outcome massey_closedness() {
  Outcome o;
  std::mt19937_64 rng(401);
  const auto families = tw_families();
  std::size_t done = 0, nontrivial = 0, nonzero_rep = 0;
  for (std::size_t k = 0; done < 600 && k < 5000; ++k) {
    const auto& T = families[k % families.size()];
    CohomologyCache H(*T);
    auto t = sample::random_valid_triple(H, rng, 400, k % 3 != 0);
    if (!t) continue;
    const MasseyResult r = massey_ainfty(H, t->f, t->g, t->h, sample::random_choices(H, *t, rng));
    const Morphism bt = *r.b_tilde;
    o.require(apply_b(*T, std::span<const Morphism>(&bt, 1)).is_zero(), "b_1(b~) != 0");
    ++done;
    nontrivial += sample::nontrivial(*t);
    nonzero_rep += !r.representative.is_zero();
  }
  o.require(done >= 500, "fewer than 500 triples");
  o.detail << done << " triples (" << nontrivial << " nontrivial, " << nonzero_rep
           << " with nonzero class) have closed b~";
  return o;
}

// --- 5 -------------------------------------------------------------------

// h·H^{-1}(X, Z) + H^0(Y, U)·f in class coordinates, from the oracle composition.
std::vector<Vec> indeterminacy_oracle(const CohomologyCache& H, const sample::Triple& t) {
  std::vector<Vec> out;
  const HomCohomology& xz = H(t.f.src, t.g.dst);
  const HomCohomology& yu = H(t.g.src, t.h.dst);
  for (std::size_t k = 0; k < xz.dim(-1); ++k) {
    const Morphism a{t.f.src, t.g.dst, -1, xz.representative(-1, k)};
    out.push_back(oracle::compose_class(H, t.h, a));
  }
  for (std::size_t k = 0; k < yu.dim(0); ++k) {
    const Morphism b{t.g.src, t.h.dst, 0, yu.representative(0, k)};
    out.push_back(oracle::compose_class(H, b, t.f));
  }
  return out;
}

bool in_span(FieldSpec field, std::size_t n, const std::vector<Vec>& span, const Vec& v) {
  std::vector<std::vector<Scalar>> rows;
  for (const Vec& s : span) rows.push_back(s.dense(n));
  const std::size_t r0 = oracle::rank(field, rows);
  rows.push_back(v.dense(n));
  return oracle::rank(field, rows) == r0;
}

Outcome coset_law() {
  Outcome o;
  std::mt19937_64 rng(501);
  const auto families = tw_families();
  std::size_t done = 0, realized = 0, with_ind = 0, differing = 0;
  for (std::size_t k = 0; done < 100 && k < 2000; ++k) {
    const auto& T = families[k % families.size()];
    CohomologyCache H(*T);
    auto t = sample::random_valid_triple(H, rng, 400, true);
    if (!t) t = sample::random_valid_triple(H, rng, 400, false);
    if (!t) continue;
    const MasseyResult r1 = massey_ainfty(H, t->f, t->g, t->h, sample::random_choices(H, *t, rng));
    const MasseyResult r2 = massey_ainfty(H, t->f, t->g, t->h, sample::random_choices(H, *t, rng));
    const auto ind = indeterminacy_oracle(H, *t);
    const Vec diff = r1.representative - r2.representative;
    o.require(in_span(T->field(), r1.ambient_dim, ind, diff), "representatives differ outside h.H^-1 + H^0.f");
    o.require(same_coset(r1, r2), "same_coset disagrees");
    differing += !diff.is_zero();
    with_ind += !r1.indeterminacy.empty();
    for (const Vec& w : r1.indeterminacy) {
      const MasseyResult rw = massey_ainfty(H, t->f, t->g, t->h, realize(H, r1, w));
      Vec expect = r1.representative;
      expect += w;
      o.require(rw.representative == expect, "realize does not hit representative + w");
      ++realized;
    }
    ++done;
  }
  o.require(done == 100, "fewer than 100 triples");
  o.detail << done << " triples, " << differing << " with different representatives, " << with_ind
           << " with indeterminacy; " << realized << " indeterminacy vectors realized";
  return o;
}

// --- 6 -------------------------------------------------------------------

// {0} and the representatives of a basis of H^d(x, y).
std::vector<Morphism> basis_cycles(const CohomologyCache& H, std::size_t x, std::size_t y, int d) {
  const Category& c = H.category();
  std::vector<Morphism> out{zero_morphism(c, x, y, d)};
  for (std::size_t k = 0; k < H(x, y).dim(d); ++k) out.push_back({x, y, d, H(x, y).representative(d, k)});
  return out;
}

bool valid_triple(const CohomologyCache& H, const Morphism& f, const Morphism& g, const Morphism& h) {
  return oracle::compose_class(H, g, f).is_zero() && oracle::compose_class(H, h, g).is_zero();
}

Outcome agreement() {
  Outcome o;
  auto qt = sample::quiver_tw();
  const TwCategory& T = *qt.tw;
  CohomologyCache H(T);
  const std::size_t n = T.object_count();
  std::size_t exhaustive = 0, nonzero = 0;
  for (std::size_t X = 0; X < n; ++X) {
    for (std::size_t Y = 0; Y < n; ++Y) {
      for (std::size_t Z = 0; Z < n; ++Z) {
        for (std::size_t U = 0; U < n; ++U) {
          const auto fs = basis_cycles(H, X, Y, 0), gs = basis_cycles(H, Y, Z, 0), hs = basis_cycles(H, Z, U, 1);
          if (fs.size() + gs.size() + hs.size() == 3 && H(X, U).dim(0) == 0) continue;
          for (const auto& f : fs) {
            for (const auto& g : gs) {
              for (const auto& h : hs) {
                if (!valid_triple(H, f, g, h)) continue;
                const MasseyResult a = massey_ainfty(H, f, g, h);
                const MasseyResult b = massey_triangulated(T, f, g, h);
                o.require(same_coset(a, b), "cosets differ on a quiver triple");
                ++exhaustive;
                nonzero += !a.representative.is_zero();
              }
            }
          }
        }
      }
    }
  }

  std::mt19937_64 rng(601);
  const auto families = tw_families();
  std::size_t random = 0;
  for (std::size_t k = 0; random < 50 && k < 1000; ++k) {
    const auto& F = families[k % families.size()];
    CohomologyCache HF(*F);
    auto t = sample::random_valid_triple(HF, rng, 400, k % 2 == 0);
    if (!t) continue;
    const MasseyResult a = massey_ainfty(HF, t->f, t->g, t->h, sample::random_choices(HF, *t, rng));
    const MasseyResult b = massey_triangulated(*F, t->f, t->g, t->h);
    o.require(same_coset(a, b), "cosets differ on a random Tw triple");
    ++random;
  }
  o.require(random == 50, "fewer than 50 random triples");
  o.detail << exhaustive << " quiver Tw triples (" << nonzero << " with nonzero class) and " << random
           << " random Tw triples give equal cosets";
  return o;
}

// --- 7 -------------------------------------------------------------------

Outcome triangles() {
  Outcome o;
  std::mt19937_64 rng(701);
  std::size_t standard = 0;
  const auto families = tw_families();
  while (standard < 120) {
    const auto& T = families[standard % families.size()];
    CohomologyCache H0(*T);
    const std::size_t x = rng() % T->object_count(), y = rng() % T->object_count();
    const Morphism f = sample::random_cycle(H0, x, y, 0, rng);
    const ConeData cd = cone(*T, f);
    auto T2 = T->with_objects({cd.cone});
    const std::size_t c = T2->object_count() - 1;
    CohomologyCache H(*T2);
    o.require(is_distinguished(H, f, T2->morphism(y, c, 0, cd.i), T2->morphism(c, x, 1, cd.p)),
              "standard triangle rejected: " + describe(*T2, f));
    ++standard;
  }
  o.detail << standard << " standard triangles accepted";

  // Brute force over F_2 on singletons A, B and all cones between them.
  const FieldSpec F2 = FieldSpec::prime(2);
  auto q = quiver_massey_fixture(F2);
  auto T0 = free_category(q, {{{0, 0}}, {{0, 1}}});
  CohomologyCache H0(*T0);
  struct Cone {
    Morphism f;
    ConeData cd;
  };
  std::vector<Cone> cs;
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      for (const Vec& cls : oracle::all_vectors(F2, H0(x, y).dim(0))) {
        const Morphism f{x, y, 0, H0(x, y).lift(0, cls)};
        cs.push_back({f, cone(*T0, f)});
      }
    }
  }
  std::vector<TwObject> extra;
  for (const auto& c : cs) extra.push_back(c.cd.cone);
  auto T = T0->with_objects(extra);
  CohomologyCache H(*T);
  const std::uint64_t morphisms = oracle::h0_morphism_count(H);
  o.require(morphisms <= 300, "brute-force category too large");
  bool tw1 = true;
  for (const auto& x : T->objects()) tw1 = tw1 && truncation_check(x, 1).accepted;
  o.require(tw1, "brute-force objects outside Tw_<=1");
  std::vector<oracle::StandardTriangle> standards;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const std::size_t c = 2 + k;
    standards.push_back({cs[k].f, T->morphism(cs[k].f.dst, c, 0, cs[k].cd.i), T->morphism(c, cs[k].f.src, 1, cs[k].cd.p)});
  }
  auto elements = [&](std::size_t x, std::size_t y, int d) {
    std::vector<Morphism> out;
    for (const Vec& cls : oracle::all_vectors(F2, H(x, y).dim(d))) out.push_back({x, y, d, H(x, y).lift(d, cls)});
    return out;
  };
  std::size_t compared = 0, yes = 0, false_yes = 0, false_no = 0;
  std::vector<std::string> examples;
  for (std::size_t X = 0; X < 2; ++X) {
    for (std::size_t Y = 0; Y < 2; ++Y) {
      for (std::size_t Z = 0; Z < T->object_count(); ++Z) {
        for (const auto& f : elements(X, Y, 0)) {
          for (const auto& g : elements(Y, Z, 0)) {
            for (const auto& h : elements(Z, X, 1)) {
              const bool brute = oracle::isomorphic_to_standard(H, standards, f, g, h);
              const bool fast = valid_triple(H, f, g, h) && is_distinguished(H, f, g, h);
              if (brute != fast) {
                (fast ? false_yes : false_no) += 1;
                if (examples.size() < 3) {
                  examples.push_back("(" + describe(*T, f) + ", " + describe(*T, g) + ", " + describe(*T, h) + ") on " +
                                     T->object(X).name + "->" + T->object(Y).name + "->" + T->object(Z).name +
                                     (brute ? " brute force yes" : " brute force no"));
                }
              }
              ++compared;
              yes += brute;
            }
          }
        }
      }
    }
  }
  std::string listed;
  for (const auto& e : examples) listed += (listed.empty() ? "" : "; ") + e;
  o.require(false_yes + false_no == 0, std::to_string(false_yes) + " triangles accepted but not distinguished, " +
                                           std::to_string(false_no) + " distinguished but rejected, e.g. " + listed);
  const Morphism z0 = zero_morphism(*T, 0, 1, 0);
  const Morphism z1 = zero_morphism(*T, 1, 2, 0);
  const Morphism z2 = zero_morphism(*T, 2, 0, 1);
  o.require(!is_distinguished(H, z0, z1, z2), "zero triangle accepted");
  o.detail << "; brute force on H^0 with " << T->object_count() << " objects and " << morphisms << " morphisms over F_2: "
           << compared << " triangles compared (" << yes << " distinguished, " << false_yes + false_no
           << " disagreements); zero control rejected";
  return o;
}

// --- 8 -------------------------------------------------------------------

bool same_shape(const TwObject& a, const TwObject& b) { return a.summands == b.summands && a.delta == b.delta; }

Outcome functoriality() {
  Outcome o;
  std::mt19937_64 rng(801);
  auto q = quiver_massey_fixture(Q, 7);
  auto T = free_category(q, {{{0, 0}}, {{0, 1}}, {{0, 2}}, {{0, 3}}, {{-1, 3}}});
  std::vector<TwObject> cs;
  cs.push_back(cone(*T, Morphism{0, 1, 0, Vec::basis(Q, 0)}).cone);
  cs.push_back(cone(*T, Morphism{1, 2, 0, Vec::basis(Q, 0)}).cone);
  cs.push_back(cone(*T, Morphism{2, 3, 0, Vec::basis(Q, 0)}).cone);
  cs.push_back(cone(*T, zero_morphism(*T, 0, 3, 0)).cone);
  auto src = T->with_objects(cs);
  std::size_t functors = 0;
  for (int k = 0; k < 3; ++k) {
    auto F = random_transported_functor(q, 7, rng);
    auto ind = induced_functor(src, F.functor, F.target, 1);
    o.require(ind.functor->arity() == 3, "induced arity is not 3");
    const Report r = verify_functor(*ind.functor, 3);
    o.require(r.ok() && r.checked_up_to == 3, "induced functor fails at arity <= 3");
    o.require(verify_functor(*ind.functor, 4).verdict == Verdict::unknown, "arity 4 is not reported unknown");
    ++functors;
  }

  // Tw(G∘F) against Tw(G)∘Tw(F).
  std::size_t pairs = 0, chains = 0;
  for (int k = 0; k < 2; ++k) {
    auto F = random_transported_functor(q, 7, rng);
    auto G = random_transported_functor(F.target, 7, rng);
    auto GF = compose_functors(G.functor, F.functor);
    auto tf = induced_functor(src, F.functor, F.target, 1);
    auto tg = induced_functor(tf.target, G.functor, G.target, 1);
    auto tgf = induced_functor(src, GF, G.target, 1);
    for (std::size_t x = 0; x < src->object_count(); ++x) {
      o.require(same_shape(tgf.target->object(x), tg.target->object(x)), "image objects differ");
    }
    auto composite = compose_functors(tg.functor, tf.functor);
    for (int i = 1; i <= 3; ++i) {
      for_each_chain(*src, i, [&](std::span<const Arg> a) {
        if (rng() % 4) return;
        o.require(composite->f(a) == tgf.functor->f(a), "Tw(G F) != Tw(G) Tw(F)");
        ++chains;
      });
    }
    ++pairs;
  }
  o.detail << functors << " induced functors pass at arity exactly 3; " << pairs << " composable pairs agree on "
           << chains << " sampled chains";
  return o;
}

// --- 9 -------------------------------------------------------------------

// Random summands over `c` (sorted by block when asked) with random δ entries
// between strictly increasing blocks.
TwObject random_block_object(const Category& c, const DirectedStructure& d, bool sorted, std::mt19937_64& rng) {
  TwObject x;
  x.name = "R";
  const std::size_t n = 1 + rng() % 4;
  for (std::size_t k = 0; k < n; ++k) {
    x.summands.push_back({static_cast<int>(rng() % 5) - 2, static_cast<std::size_t>(rng() % c.object_count())});
  }
  if (sorted) {
    std::stable_sort(x.summands.begin(), x.summands.end(),
                     [&](const Summand& a, const Summand& b) { return d.block_of[a.object] < d.block_of[b.object]; });
  }
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < row; ++col) {
      const Summand& r = x.summands[row];
      const Summand& s = x.summands[col];
      if (d.block_of[r.object] <= d.block_of[s.object] || rng() % 2) continue;
      const auto cand = c.hom(s.object, r.object).indices(1 + r.shift - s.shift);
      if (cand.empty()) continue;
      x.delta.emplace(std::make_pair(row, col), Vec::basis(c.field(), cand[rng() % cand.size()]));
    }
  }
  return x;
}

Outcome directedness() {
  Outcome o;
  const auto arrow = analyze_directed(*arrow_fixture(5, Q));
  o.require(arrow.directed && arrow.length == 1, "arrow length");
  auto qf = quiver_massey_fixture(Q);
  const auto quiver = analyze_directed(*qf);
  o.require(quiver.directed && quiver.length == 3, "quiver length");
  auto p = poly_fixture(7, 4, Q);
  const auto poly = analyze_directed(*p);
  o.require(!poly.directed && poly.witness && format_element(*p, *poly.witness) == "O->O:1*t", "poly witness");
  o.detail << "arrow length " << arrow.length << ", quiver length " << quiver.length << ", poly refused with witness "
           << (poly.witness ? format_element(*p, *poly.witness) : "none");

  std::mt19937_64 rng(901);
  std::size_t block_form = 0, regrouped = 0, deltas = 0;
  const std::pair<std::shared_ptr<AInftyCategory>, DirectedStructure> cats[] = {{qf, quiver},
                                                                                 {arrow_fixture(5, Q), arrow}};
  for (const auto& [c, d] : cats) {
    for (int k = 0; k < 300; ++k) {
      const bool sorted = k % 2 == 0;
      TwObject x = random_block_object(*c, d, sorted, rng);
      check_tw_object(*c, x);
      if (!block_form_check(x, d)) {
        o.require(!sorted, "sorted object not in block form");
        x = regroup(x, d);
        o.require(block_form_check(x, d), "regrouped object not in block form");
        ++regrouped;
      }
      o.require(truncation_check(x, static_cast<int>(d.length)).accepted, "block form object outside Tw_<=l");
      ++block_form;
      deltas += !x.delta.empty();
    }
  }
  o.detail << "; " << block_form << " block-form objects (" << regrouped << " after regrouping, " << deltas
           << " with nonzero δ) lie in Tw_<=l";
  return o;
}

// --- 10 ------------------------------------------------------------------

struct Run {
  int code;
  std::string out;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ainf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str() + err.str()};
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "ainf_acceptance";
  std::filesystem::create_directories(dir);
  std::size_t runs = 0, trips = 0;
  for (const auto& name : fixture_names()) {
    const std::string file = (dir / (name + ".json")).string();
    o.require(cli({"fixtures", "export", name, "-o", file}).code == 0, "export " + name);
    const std::string text = read_file(file);
    o.require(format_category(*parse_category(text)) == text, "round trip " + name);
    o.require(format_category(*make_fixture(name)) == text, "export differs from the fixture " + name);
    ++trips;
    for (const std::string cmd : {"verify", "cohomology", "directed"}) {
      const Run a = cli({"--json", cmd, file});
      const Run b = cli({"--json", cmd, file});
      o.require(a.out == b.out && a.code == b.code && !a.out.empty(), cmd + " output differs on " + name);
      ++runs;
    }
  }
  const std::string q = (dir / "quiver_massey.json").string();
  const std::string tw = (dir / "tw.json").string();
  auto qt = sample::quiver_tw();
  const std::string tw_text = format_tw(*qt.base, qt.tw->objects());
  write_file(tw, tw_text);
  o.require(format_tw(*qt.base, parse_tw(*qt.base, read_file(tw))) == tw_text, "Tw round trip");
  ++trips;
  for (bool tri : {false, true}) {
    std::vector<std::string> args{"--json", "massey", q, "--tw", tw, "--f", "A->B:f0", "--g", "B->C:g0",
                                  "--h", "C->S-1D:h0{-1}"};
    if (tri) args.push_back("--triangulated");
    const Run a = cli(args), b = cli(args);
    o.require(a.code == 0 && a.out == b.out, "massey output differs");
    ++runs;
  }
  std::filesystem::remove_all(dir);
  o.detail << runs << " --json commands byte-identical across two runs; " << trips << " documents round-trip";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"relation suite", relation_suite},
      {"sign conventions", sign_conventions},
      {"Maurer-Cartan and cones", cones},
      {"Massey closedness", massey_closedness},
      {"coset law", coset_law},
      {"A-infinity vs triangulated Massey", agreement},
      {"triangle detection", triangles},
      {"functoriality bound", functoriality},
      {"directedness", directedness},
      {"determinism and format", determinism},
  };
  int failed = 0;
  int k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_problem = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << k << " " << (o.pass ? "PASS" : "FAIL") << " " << name << ": " << o.detail.str();
    if (!o.pass) std::cout << " [" << o.first_problem << "]";
    std::printf(" (%.1f s)\n", seconds_since(t0));
    std::cout.flush();
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
