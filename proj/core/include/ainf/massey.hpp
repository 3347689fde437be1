#pragma once

#include <optional>
#include <vector>

#include "ainf/cohomology.hpp"
#include "ainf/twisted.hpp"

namespace ainf {

/// Optional choices for the A∞ Massey product. Unset entries are solved
/// deterministically (free coordinates zero).
struct MasseyChoices {
  std::optional<Morphism> u;  // b_1(u) = -b_2(g, f), u ∈ hom^{-1}(X, Z)
  std::optional<Morphism> v;  // b_1(v) = b_2(h, g), v ∈ hom^0(Y, U)
};

/// ⟨h, g, f⟩ as representative + span(indeterminacy) inside H^0(X, U).
struct MasseyResult {
  std::size_t src = 0;  // X
  std::size_t dst = 0;  // U
  Vec representative;   // class coordinates in H^0(X, U)
  std::vector<Vec> indeterminacy;  // echelon basis, class coordinates
  std::size_t ambient_dim = 0;     // dim H^0(X, U)

  // Witness data of the A∞ computation (empty for the triangulated one).
  std::optional<Morphism> b_tilde;
  std::optional<Morphism> u;
  std::optional<Morphism> v;
  std::vector<Morphism> alphas;      // cycle representatives of H^{-1}(X, Z)
  std::vector<Morphism> betas;       // cycle representatives of H^0(Y, U)
  std::vector<Vec> generator_classes;  // classes of -b_2(h, α), then b_2(β, f)
};

/// f ∈ Z^0(X, Y), g ∈ Z^0(Y, Z), h ∈ Z^1(Z, U) are cycle lifts of the classes.
/// Throws PreconditionError unless gf = 0 = hg in cohomology, or when
/// supplied choices do not solve their equations. b_1(b̃) = 0 is asserted.
MasseyResult massey_ainfty(const CohomologyCache& H, const Morphism& f, const Morphism& g, const Morphism& h,
                           const MasseyChoices& choices = {});

/// c - representative ∈ span(indeterminacy); c in H^0(X, U) coordinates.
bool contains_class(const MasseyResult& r, const Vec& c);
bool same_coset(const MasseyResult& a, const MasseyResult& b);

/// Choices (u + α, v + β) whose Massey representative is r.representative + w,
/// for w in the indeterminacy span. Requires an A∞ result.
MasseyChoices realize(const CohomologyCache& H, const MasseyResult& r, const Vec& w);

/// Triangle X →f Y →g Z →h X (h of degree 1) is distinguished iff id_X ∈ ⟨h, g, f⟩.
bool is_distinguished(const CohomologyCache& H, const Morphism& f, const Morphism& g, const Morphism& h);

/// Diagram-completion Massey set in H^0(Tw): on the standard cone triangle of f,
/// every b with b∘p = h∘a for some a with a∘i = g. Solved as one linear system.
MasseyResult massey_triangulated(const TwCategory& T, const Morphism& f, const Morphism& g, const Morphism& h);

}  // namespace ainf
