#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "ainf/functor.hpp"

namespace ainf {

/// Formal shift Σ^shift A of a base object.
struct Summand {
  int shift = 0;
  std::size_t object = 0;
  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Matrix of base elements: entry (row, col) lies in base hom(col object, row object)
/// and carries the σ-offset shift(row) - shift(col) implicitly.
using EntryMatrix = std::map<std::pair<std::size_t, std::size_t>, Vec>;

/// Twisted complex (⊕ Σ^{a_i} A_i, δ). δ has total degree 1 and is strictly
/// lower triangular; an empty summand list is the zero object.
struct TwObject {
  std::string name;
  std::vector<Summand> summands;
  EntryMatrix delta;

  friend bool operator==(const TwObject&, const TwObject&) = default;
};

/// Twisted complexes over a base category.
///
/// hom(X, Y) has one basis vector per (row j of Y, column i of X, basis
/// vector of base hom(A_i, B_j)), ordered by row, then column, then base
/// index; its degree is |f| - (b_j - a_i). Operations insert δ's between
/// the arguments; base operations above base.max_arity() count as zero.
class TwCategory : public Category {
 public:
  TwCategory(std::shared_ptr<const Category> base, std::vector<TwObject> objects);

  const Category& base() const noexcept { return *base_; }
  std::shared_ptr<const Category> base_ptr() const noexcept { return base_; }
  const TwObject& object(std::size_t i) const { return objects_.at(i); }
  const std::vector<TwObject>& objects() const noexcept { return objects_; }

  /// Same base, objects extended by `extra`.
  std::shared_ptr<TwCategory> with_objects(const std::vector<TwObject>& extra) const;

  /// Tw basis index of (row, col, base index) in hom(x, y).
  std::size_t index(std::size_t x, std::size_t y, std::size_t row, std::size_t col, std::size_t k) const;
  struct Position {
    std::size_t row, col, k;
  };
  Position position(std::size_t x, std::size_t y, std::size_t idx) const;
  /// σ-offset of the (row, col) block of hom(x, y).
  int offset(std::size_t x, std::size_t y, std::size_t row, std::size_t col) const;

  /// Builds a morphism x → y of the given degree from base entries.
  Morphism morphism(std::size_t x, std::size_t y, int degree, const EntryMatrix& entries) const;
  /// Base entries of a morphism.
  EntryMatrix entries(const Morphism& f) const;

  FieldSpec field() const override { return base_->field(); }
  std::size_t object_count() const override { return objects_.size(); }
  std::string object_name(std::size_t obj) const override { return objects_.at(obj).name; }
  const GradedSpace& hom(std::size_t src, std::size_t dst) const override;
  int max_arity() const override { return base_->max_arity(); }
  /// b_n can be nonzero only if the base has a nonzero operation of arity ≥ n.
  bool has_arity(int i) const override { return i >= 1 && i <= top_base_arity(); }
  int top_base_arity() const;
  std::optional<Vec> unit(std::size_t obj) const override;
  Vec b(std::span<const Arg> args) const override;

  /// δ-edge of an object, expanded to base basis vectors.
  struct Edge {
    std::size_t row, col;
    Arg arg;  // base basis vector
    Scalar coeff;
    int offset;
  };
  const std::vector<std::vector<Edge>>& edges_into(std::size_t obj) const { return edges_.at(obj); }

 private:
  struct HomLayout {
    GradedSpace space;
    std::vector<std::vector<std::size_t>> start;  // [row][col]
    std::vector<Position> positions;
  };
  const HomLayout& layout(std::size_t x, std::size_t y) const;
  Vec compute_b(std::span<const Arg> args) const;

  std::shared_ptr<const Category> base_;
  std::vector<TwObject> objects_;
  std::vector<std::vector<std::vector<Edge>>> edges_;  // [obj][row] → edges leaving row downwards
  std::vector<HomLayout> layouts_;  // [src * n + dst]
  mutable std::mutex mu_;
  mutable std::map<std::vector<Arg>, Vec> memo_;
};

/// Checks shape, strict lower triangularity and that every δ entry has total
/// degree 1. Throws PreconditionError otherwise.
void check_tw_object(const Category& base, const TwObject& x);

/// Free(A) restricted to the given formal sums (all twists zero).
std::shared_ptr<TwCategory> free_category(std::shared_ptr<const Category> base,
                                          const std::vector<std::vector<Summand>>& objects);

/// Σ_i b_i(sδ, ..., sδ) as a base entry matrix.
EntryMatrix maurer_cartan_sum(const Category& base, const TwObject& x);
Report verify_maurer_cartan(const Category& base, const TwObject& x);

/// Σ^k on objects: shifts +k, δ entries σ^a f ↦ (-1)^{ka} σ^a f.
TwObject shift_object(const TwObject& x, int k = 1);
/// Σ^k on a morphism x → y of `from`, landing in hom(sx, sy) of `to`, where
/// sx, sy must be Σ^k x, Σ^k y. Entries σ^a f pick up (-1)^{ka}.
Morphism shift_morphism(const TwCategory& from, const Morphism& f, const TwCategory& to, std::size_t sx,
                        std::size_t sy, int k = 1);

/// Standard triangle X →f Y →i C(f) →p X (p of degree 1).
struct ConeData {
  TwObject cone;
  EntryMatrix i;  // Y → C(f)
  EntryMatrix p;  // C(f) → X
};

/// C(f) = (ΣX ⊕ Y, [[Σδ_X, 0], [σ^{-1} f, δ_Y]]). f must be closed of degree 0.
/// An entry σ^c g of f becomes (-1)^c σ^{c-1} g in the cone.
ConeData cone(const TwCategory& c, const Morphism& f, std::string name = {});

/// Coarsest consecutive block partition of the summands making δ strictly
/// block lower triangular. `block_starts` lists the first summand of each block.
struct TruncationWitness {
  std::vector<std::size_t> block_starts;
  bool accepted = false;
  std::size_t blocks() const noexcept { return block_starts.size(); }
};
TruncationWitness truncation_check(const TwObject& x, int q);

/// Tw_{≤q} F: objects (F(A), Σ_k F(δ, ..., δ)) and components given by δ-insertion.
class InducedTwFunctor : public Functor {
 public:
  InducedTwFunctor(std::shared_ptr<const TwCategory> source, std::shared_ptr<const Functor> base_functor,
                   std::shared_ptr<const TwCategory> target, int q);

  const Category& source() const override { return *source_; }
  const Category& target() const override { return *target_; }
  int arity() const override { return arity_; }
  std::size_t map_object(std::size_t obj) const override { return obj; }
  Vec f(std::span<const Arg> args) const override;

 private:
  std::shared_ptr<const TwCategory> source_;
  std::shared_ptr<const Functor> F_;
  std::shared_ptr<const TwCategory> target_;
  int q_;
  int arity_;
};

struct InducedFunctor {
  std::shared_ptr<TwCategory> target;
  std::shared_ptr<InducedTwFunctor> functor;
};

/// Image of one twisted complex under F: same shifts, δ' = Σ_k F_k(δ, ..., δ).
TwObject image_object(const Functor& F, const TwObject& x);

/// Induced functor on Tw_{≤q}; every source object must pass truncation_check(·, q)
/// and q ≤ arity(F). `target_base` is the target of F. Output arity is ⌊(m - q)/(q + 1)⌋.
InducedFunctor induced_functor(std::shared_ptr<const TwCategory> source, std::shared_ptr<const Functor> F,
                               std::shared_ptr<const Category> target_base, int q);

}  // namespace ainf
