#include <gtest/gtest.h>

#include "ainf/cohomology.hpp"
#include "ainf/error.hpp"
#include "ainf/fixtures.hpp"
#include "oracles.hpp"
#include "samplers.hpp"

using namespace ainf;

namespace {

const FieldSpec Q = FieldSpec::rationals();

void expect_dims_match_oracle(const Category& c) {
  CohomologyCache H(c);
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    for (std::size_t y = 0; y < c.object_count(); ++y) {
      const GradedSpace& hom = c.hom(x, y);
      for (int d : hom.degrees()) {
        for (int e = d - 1; e <= d + 1; ++e) {
          EXPECT_EQ(H(x, y).dim(e), oracle::cohomology_dim(c, x, y, e))
              << c.object_name(x) << " -> " << c.object_name(y) << " degree " << e;
        }
      }
    }
  }
}

}  // namespace

TEST(Cohomology, MinimalCategoryIsItsOwnCohomology) {
  auto q = quiver_massey_fixture(Q);
  CohomologyCache H(*q);
  EXPECT_EQ(H(0, 1).dim(0), 1u);
  EXPECT_EQ(H(0, 3).dim(-1), 1u);
  EXPECT_EQ(H(0, 3).dim(0), 0u);
  EXPECT_EQ(H(1, 0).dims().size(), 0u);
  EXPECT_EQ(H(2, 2).unit_class(), std::optional<std::size_t>(0));
}

TEST(Cohomology, DgPair) {
  auto c = dg_pair_fixture(Q);
  CohomologyCache H(*c);
  const HomCohomology& xy = H(0, 1);
  EXPECT_EQ(xy.dim(-1), 0u);
  EXPECT_EQ(xy.dim(0), 1u);
  const std::size_t p = c->find_basis(0, 1, "p")->index;
  const std::size_t q = c->find_basis(0, 1, "q")->index;
  const std::size_t r = c->find_basis(0, 1, "r")->index;
  EXPECT_TRUE(xy.is_boundary(0, Vec::basis(Q, q)));
  EXPECT_FALSE(xy.is_boundary(0, Vec::basis(Q, r)));
  EXPECT_FALSE(xy.is_cycle(-1, Vec::basis(Q, p)));
  EXPECT_EQ(xy.classify(-1, Vec::basis(Q, p)), std::nullopt);
  // b_1 = -m_1, so b_1(-p) = q.
  EXPECT_EQ(*xy.primitive(0, Vec::basis(Q, q)), -Vec::basis(Q, p));
  // Classes ignore boundaries.
  Vec rq = Vec::basis(Q, r);
  rq += Vec::basis(Q, q);
  EXPECT_EQ(*xy.classify(0, rq), *xy.classify(0, Vec::basis(Q, r)));
  expect_dims_match_oracle(*c);
}

TEST(Cohomology, DimsMatchOracleOnTwistedComplexes) {
  auto qt = sample::quiver_tw();
  expect_dims_match_oracle(*qt.tw);
  auto fp = sample::quiver_tw(FieldSpec::prime(3));
  expect_dims_match_oracle(*fp.tw);
}

TEST(Cohomology, RepresentativesAreCyclesAndClassifyBack) {
  auto qt = sample::quiver_tw();
  CohomologyCache H(*qt.tw);
  for (std::size_t x = 0; x < qt.tw->object_count(); ++x) {
    for (std::size_t y = 0; y < qt.tw->object_count(); ++y) {
      const HomCohomology& hc = H(x, y);
      for (int d : hc.degrees()) {
        for (std::size_t k = 0; k < hc.dim(d); ++k) {
          const Vec& rep = hc.representative(d, k);
          EXPECT_TRUE(hc.is_cycle(d, rep));
          EXPECT_EQ(*hc.classify(d, rep), Vec::basis(Q, k));
        }
      }
    }
  }
}

TEST(Cohomology, CohomologyCategoryOfTwistedComplexes) {
  auto qt = sample::quiver_tw();
  auto hc = cohomology_category(*qt.tw);
  EXPECT_TRUE(verify_relations(*hc.category, 3).ok());
  EXPECT_TRUE(verify_units(*hc.category).ok());
  for (std::size_t x = 0; x < qt.tw->object_count(); ++x) {
    for (std::size_t y = 0; y < qt.tw->object_count(); ++y) {
      for (int d : hc.category->hom(x, y).degrees()) {
        EXPECT_EQ(hc.category->hom(x, y).indices(d).size(), (*hc.homs)(x, y).dim(d));
      }
    }
  }
}

TEST(Cohomology, CompositionIsInducedByM2) {
  auto qt = sample::quiver_tw();
  auto hc = cohomology_category(*qt.tw);
  std::mt19937_64 rng(11);
  const auto& H = *hc.homs;
  const std::size_t n = qt.tw->object_count();
  for (int t = 0; t < 200; ++t) {
    const std::size_t x = rng() % n, y = rng() % n, z = rng() % n;
    const Morphism a = sample::random_cycle(H, x, y, 0, rng);
    const Morphism b = sample::random_cycle(H, y, z, 0, rng);
    const Vec ca = *H(x, y).classify(0, a.coords), cb = *H(y, z).classify(0, b.coords);
    const Morphism args[2] = {Morphism{y, z, 0, cb}, Morphism{x, y, 0, ca}};
    EXPECT_EQ(apply_m(*hc.category, args).coords, oracle::compose_class(H, b, a));
  }
}

TEST(Cohomology, FormalityWitness) {
  auto q = quiver_massey_fixture(Q);
  IdentityFunctor id(q, 6);
  EXPECT_THROW(check_formality_witness(*q, id, 2), PreconditionError);
  bool previous = true;
  for (int N = 3; N <= 6; ++N) {
    const bool now = check_formality_witness(*q, id, N);
    EXPECT_TRUE(previous || !now) << N;
    previous = now;
  }
  EXPECT_FALSE(check_formality_witness(*q, id, 3));

  auto a = arrow_fixture(5, Q);
  IdentityFunctor ida(a, 6);
  for (int N = 3; N <= 6; ++N) EXPECT_TRUE(check_formality_witness(*a, ida, N));
}
