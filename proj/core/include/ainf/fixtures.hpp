#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ainf/ainfty.hpp"

namespace ainf {

/// Objects A, B, C, D; f0: A→B, g0: B→C, h0: C→D in degree 0 and c: A→D in
/// degree -1. Non-unit compositions vanish; the only higher operation is
/// m_3(h0, g0, f0) = c.
std::shared_ptr<AInftyCategory> quiver_massey_fixture(FieldSpec field, int max_arity = 6);

/// One object with hom basis 1, t, ..., t^{d-1}, |t| = 1 - N, and truncated
/// polynomial multiplication. N must be odd and at least 7, d at least 2.
std::shared_ptr<AInftyCategory> poly_fixture(int N, int d, FieldSpec field, int max_arity = 6);

/// Objects A, B; hom(A, B) spanned by x0 (degree 0) and xN (degree -N);
/// hom(B, A) = 0. Requires N ≥ 4.
std::shared_ptr<AInftyCategory> arrow_fixture(int N, FieldSpec field, int max_arity = 6);

/// Small non-minimal category: objects X, Y, hom(X, Y) = {p (degree -1), q, r
/// (degree 0)} with m_1(p) = q.
std::shared_ptr<AInftyCategory> dg_pair_fixture(FieldSpec field, int max_arity = 6);

struct RandomBounds {
  FieldSpec field = FieldSpec::rationals();
  int objects = 4;      // at most 4
  int max_hom_dim = 2;  // at most 3
  int max_arity = 4;    // at most 5
  int min_degree = -1;
  int max_degree = 0;
  /// Probability of a nonzero hom between two distinct objects.
  double hom_density = 0.8;
  /// Allow homs from later to earlier objects.
  bool allow_backward = false;
  /// Probability that an eligible operation entry is nonzero.
  double op_density = 0.5;
  int attempts = 5000;
};

/// Minimal strictly unital category with random sparse m_2, ..., m_n,
/// rejection-sampled until every relation holds. Deterministic per seed;
/// throws Error when the attempt budget is exhausted.
std::shared_ptr<AInftyCategory> random_minimal_category(std::uint64_t seed, const RandomBounds& bounds = {});

struct FixtureParams {
  int N = 7;
  int d = 3;
  FieldSpec field = FieldSpec::rationals();
  std::uint64_t seed = 0;
  int max_arity = 6;
};

std::vector<std::string> fixture_names();
/// Named fixture: quiver_massey, poly, arrow, dg_pair, random.
std::shared_ptr<AInftyCategory> make_fixture(const std::string& name, const FixtureParams& params = {});

}  // namespace ainf
