#pragma once

#include <optional>
#include <random>

#include "ainf/massey.hpp"
#include "ainf/twisted.hpp"

namespace sample {

using namespace ainf;

struct QuiverTw {
  std::shared_ptr<AInftyCategory> base;
  std::shared_ptr<TwCategory> tw;
};

/// Tw(quiver fixture) on A, B, C, D, ΣA, Σ^{-1}D, C(f0), C(g0) and the
/// three-summand cone of (0, g0): C(f0) → C.
QuiverTw quiver_tw(FieldSpec field = FieldSpec::rationals());

/// Singleton objects of `base`, shift 0, plus the same objects shifted by -1.
std::shared_ptr<TwCategory> with_desuspensions(std::shared_ptr<const Category> base);

/// Singletons of `base` at shifts -1, 0, 1 plus cones of `cones` random
/// nonzero closed degree-0 maps between them.
std::shared_ptr<TwCategory> shifted_with_cones(std::shared_ptr<const Category> base, std::uint64_t seed, int cones = 8);

/// Random element of Z^d(x, y), plus a random boundary when asked.
Morphism random_cycle(const CohomologyCache& H, std::size_t x, std::size_t y, int d, std::mt19937_64& rng,
                      bool with_boundary = true);

struct Triple {
  Morphism f, g, h;
};

/// f ∈ Z^0(X, Y), g ∈ Z^0(Y, Z), h ∈ Z^1(Z, U) with gf = 0 = hg in cohomology.
/// With `dense`, only objects with H^0(X, Y), H^0(Y, Z), H^1(Z, U) and
/// H^0(X, U) all nonzero are drawn.
std::optional<Triple> random_valid_triple(const CohomologyCache& H, std::mt19937_64& rng, int attempts = 400,
                                          bool dense = false);

/// u and v solving their defining equations, shifted by random cycles and boundaries.
MasseyChoices random_choices(const CohomologyCache& H, const Triple& t, std::mt19937_64& rng);

/// True when at least one of f, g, h is nonzero.
bool nontrivial(const Triple& t);

}  // namespace sample
