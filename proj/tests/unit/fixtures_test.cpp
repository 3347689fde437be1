#include <gtest/gtest.h>

#include "ainf/error.hpp"
#include "ainf/fixtures.hpp"
#include "ainf/io.hpp"

using namespace ainf;

TEST(Fixtures, NamedFixturesPassTheirGate) {
  for (const auto& name : fixture_names()) {
    for (FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
      FixtureParams params;
      params.field = field;
      auto c = make_fixture(name, params);
      EXPECT_EQ(c->field(), field) << name;
      EXPECT_TRUE(verify_relations(*c, c->max_arity()).ok()) << name;
      EXPECT_TRUE(verify_units(*c).ok()) << name;
    }
  }
  EXPECT_THROW(make_fixture("nope"), PreconditionError);
}

TEST(Fixtures, ParameterChecks) {
  EXPECT_THROW(poly_fixture(8, 3, FieldSpec::rationals()), PreconditionError);
  EXPECT_THROW(poly_fixture(5, 3, FieldSpec::rationals()), PreconditionError);
  EXPECT_THROW(poly_fixture(7, 1, FieldSpec::rationals()), PreconditionError);
  EXPECT_THROW(arrow_fixture(3, FieldSpec::rationals()), PreconditionError);
  auto p = poly_fixture(9, 4, FieldSpec::rationals());
  EXPECT_EQ(p->hom(0, 0).dim(), 4u);
  EXPECT_EQ(p->hom(0, 0).degree_of(3), -24);
  auto a = arrow_fixture(6, FieldSpec::rationals());
  EXPECT_EQ(a->hom(0, 1).degrees(), (std::vector<int>{-6, 0}));
  EXPECT_EQ(a->hom(1, 0).dim(), 0u);
}

TEST(Fixtures, RandomCategoriesAreDeterministic) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const std::string a = format_category(*random_minimal_category(seed));
    const std::string b = format_category(*random_minimal_category(seed));
    EXPECT_EQ(a, b);
  }
  EXPECT_NE(format_category(*random_minimal_category(1)), format_category(*random_minimal_category(2)));
}

TEST(Fixtures, RandomCategoriesHaveHigherOperations) {
  RandomBounds bounds;
  bounds.max_arity = 4;
  int with_m3 = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto c = random_minimal_category(seed, bounds);
    EXPECT_LE(c->object_count(), 4u);
    EXPECT_EQ(c->max_arity(), 4);
    bool any = false;
    for_each_chain(*c, 3, [&](std::span<const Arg> a) { any = any || !c->m(a).is_zero(); });
    with_m3 += any;
  }
  EXPECT_GT(with_m3, 0);
}
