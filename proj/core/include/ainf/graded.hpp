#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ainf/linalg.hpp"

namespace ainf {

struct BasisElement {
  std::string label;
  int degree = 0;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite-dimensional Z-graded vector space with an ordered, labelled basis.
/// Basis indices are global to the space; each carries its own degree.
class GradedSpace {
 public:
  GradedSpace() = default;

  /// Appends a basis vector and returns its index. Labels must be unique
  /// within a degree.
  std::size_t add(std::string label, int degree);

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t dim(int degree) const;
  const BasisElement& operator[](std::size_t i) const { return basis_.at(i); }
  int degree_of(std::size_t i) const { return basis_.at(i).degree; }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }

  /// Indices of the basis vectors in the given degree, in basis order.
  std::vector<std::size_t> indices(int degree) const;
  /// Degrees with nonzero dimension, ascending.
  std::vector<int> degrees() const;
  std::map<int, std::size_t> dims() const;

  std::optional<std::size_t> find(std::string_view label) const;
  std::optional<std::size_t> find(std::string_view label, int degree) const;

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

 private:
  std::vector<BasisElement> basis_;
};

/// Homogeneous element of a graded space.
struct GradedElement {
  int degree = 0;
  Vec coords;
};

/// Checks that every coordinate lies in `degree`. Throws PreconditionError otherwise.
GradedElement make_element(const GradedSpace& space, int degree, Vec coords);

/// Σ^n A, i.e. (Σ^n A)_i = A_{i+n}: a vector of degree e becomes degree e - n.
GradedSpace shift_space(const GradedSpace& a, int n);

/// Degree-d linear map. blocks[i] sends domain degree i to codomain degree i+d,
/// with rows/columns indexed by position within `indices(...)` of each degree.
/// Missing blocks are zero.
class GradedMap {
 public:
  GradedMap(FieldSpec field, GradedSpace domain, GradedSpace codomain, int degree);

  const FieldSpec& field() const noexcept { return field_; }
  const GradedSpace& domain() const noexcept { return domain_; }
  const GradedSpace& codomain() const noexcept { return codomain_; }
  int degree() const noexcept { return degree_; }

  /// Block from domain degree i; a zero matrix of the right shape if unset.
  Matrix block(int i) const;
  void set_block(int i, Matrix m);

  GradedElement apply(const GradedElement& x) const;

  /// Dense matrix on the whole basis (codomain.dim() x domain.dim()).
  Matrix total_matrix() const;

  friend bool operator==(const GradedMap& a, const GradedMap& b);

 private:
  FieldSpec field_;
  GradedSpace domain_;
  GradedSpace codomain_;
  int degree_;
  std::map<int, Matrix> blocks_;
};

/// g ∘ f, of degree |g| + |f|.
GradedMap compose(const GradedMap& g, const GradedMap& f);

/// Σf : ΣA → ΣB with (Σf)_i = (-1)^{|f|} f_{i+1}.
GradedMap shift_map(const GradedMap& f);

/// s^n_A : A → Σ^n A of degree -n, identity on components. n < 0 gives ω^{-n}.
GradedMap degree_change(FieldSpec field, const GradedSpace& a, int n);

GradedMap identity_map(FieldSpec field, const GradedSpace& a);

/// Per-degree kernel and image dimensions of a graded map.
struct DegreeRanks {
  std::size_t domain_dim = 0;
  std::size_t kernel_dim = 0;
  std::size_t image_dim = 0;
};
std::map<int, DegreeRanks> degree_ranks(const GradedMap& f);

}  // namespace ainf
