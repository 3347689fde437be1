#include <gtest/gtest.h>

#include <random>

#include "ainf/error.hpp"
#include "ainf/fixtures.hpp"
#include "ainf/massey.hpp"
#include "oracles.hpp"
#include "samplers.hpp"

using namespace ainf;

namespace {

const FieldSpec Q = FieldSpec::rationals();

struct QuiverTriple {
  sample::QuiverTw qt;
  Morphism f, g, h;
};

// f0 : A → B, g0 : B → C, h0 : C → Σ^{-1}D (degree 1).
QuiverTriple quiver_triple(FieldSpec field = Q) {
  QuiverTriple t{sample::quiver_tw(field), {}, {}, {}};
  t.f = Morphism{0, 1, 0, Vec::basis(field, 0)};
  t.g = Morphism{1, 2, 0, Vec::basis(field, 0)};
  t.h = Morphism{2, 5, 1, Vec::basis(field, 0)};
  return t;
}

}  // namespace

TEST(Massey, QuiverTripleIsMinusC) {
  for (FieldSpec field : {Q, FieldSpec::prime(5)}) {
    auto t = quiver_triple(field);
    CohomologyCache H(*t.qt.tw);
    ASSERT_EQ(H(0, 5).dim(0), 1u);
    const auto r = massey_ainfty(H, t.f, t.g, t.h);
    EXPECT_EQ(r.ambient_dim, 1u);
    EXPECT_TRUE(r.indeterminacy.empty());
    EXPECT_EQ(r.representative, -Vec::basis(field, 0));
    // The class is represented by c itself, viewed in hom(A, Σ^{-1}D).
    EXPECT_EQ(*H(0, 5).classify(0, Vec::basis(field, 0)), Vec::basis(field, 0));
    const auto tri = massey_triangulated(*t.qt.tw, t.f, t.g, t.h);
    EXPECT_TRUE(same_coset(r, tri));
    EXPECT_TRUE(r.b_tilde.has_value());
    EXPECT_FALSE(tri.b_tilde.has_value());
  }
}

TEST(Massey, ZeroTripleGivesZeroCoset) {
  auto t = quiver_triple();
  CohomologyCache H(*t.qt.tw);
  const Morphism f = zero_morphism(*t.qt.tw, 0, 1, 0);
  const Morphism g = zero_morphism(*t.qt.tw, 1, 2, 0);
  const Morphism h = zero_morphism(*t.qt.tw, 2, 5, 1);
  const auto r = massey_ainfty(H, f, g, h);
  EXPECT_TRUE(r.representative.is_zero());
  EXPECT_TRUE(contains_class(r, Vec(Q)));
  EXPECT_FALSE(contains_class(r, Vec::basis(Q, 0)));
}

TEST(Massey, RejectsInvalidTriples) {
  auto t = quiver_triple();
  CohomologyCache H(*t.qt.tw);
  const Morphism idB = unit_morphism(*t.qt.tw, 1);
  EXPECT_THROW(massey_ainfty(H, t.f, idB, zero_morphism(*t.qt.tw, 1, 5, 1)), PreconditionError);
  EXPECT_THROW(massey_ainfty(H, t.f, t.g, Morphism{2, 5, 0, Vec(Q)}), PreconditionError);
}

TEST(Massey, CosetIsIndependentOfChoices) {
  std::mt19937_64 rng(3);
  auto T = sample::quiver_tw().tw;
  CohomologyCache H(*T);
  int nonzero = 0, with_indeterminacy = 0;
  for (int k = 0; k < 60; ++k) {
    auto t = sample::random_valid_triple(H, rng, 400, k % 2 == 0);
    ASSERT_TRUE(t.has_value());
    const auto base = massey_ainfty(H, t->f, t->g, t->h);
    if (!base.representative.is_zero()) ++nonzero;
    if (!base.indeterminacy.empty()) ++with_indeterminacy;
    for (int j = 0; j < 3; ++j) {
      const auto other = massey_ainfty(H, t->f, t->g, t->h, sample::random_choices(H, *t, rng));
      EXPECT_TRUE(same_coset(base, other));
      EXPECT_TRUE(contains_class(base, other.representative));
    }
    for (const Vec& w : base.indeterminacy) {
      const auto realized = massey_ainfty(H, t->f, t->g, t->h, realize(H, base, w));
      Vec expected = base.representative;
      expected += w;
      EXPECT_EQ(realized.representative, expected);
    }
  }
  EXPECT_GT(nonzero + with_indeterminacy, 0);
}

TEST(Massey, DistinguishedTriangles) {
  auto qt = sample::quiver_tw();
  const auto& T = *qt.tw;
  CohomologyCache H(T);
  const Morphism f0{0, 1, 0, Vec::basis(Q, 0)};
  const auto cd = cone(T, f0);
  ASSERT_EQ(cd.cone, T.object(6));
  const Morphism i = T.morphism(1, 6, 0, cd.i);
  const Morphism p = T.morphism(6, 0, 1, cd.p);
  EXPECT_TRUE(is_distinguished(H, f0, i, p));
  // Zero control: replacing p by zero loses id_A.
  EXPECT_FALSE(is_distinguished(H, f0, i, zero_morphism(T, 6, 0, 1)));
  // Rescaling p alone is not a triangle isomorphism when f0 is nonzero in H^0:
  // the coset becomes {λ id_A}.
  for (long lambda : {2, -1}) {
    Morphism pl = p;
    pl.coords = p.coords.scaled(Scalar(Q, lambda));
    EXPECT_FALSE(is_distinguished(H, f0, i, pl)) << lambda;
  }
}
