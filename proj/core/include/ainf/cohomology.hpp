#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "ainf/ainfty.hpp"
#include "ainf/functor.hpp"

namespace ainf {

/// Cohomology of the complex (hom(src, dst), b_1), degree by degree.
///
/// Class representatives are cycles chosen from the reduced kernel basis;
/// on an endomorphism space the unit replaces one of them so that its class
/// is a basis vector. Elements are given in coordinates of the whole hom space.
class HomCohomology {
 public:
  HomCohomology(const Category& c, std::size_t src, std::size_t dst);

  std::size_t src() const noexcept { return src_; }
  std::size_t dst() const noexcept { return dst_; }
  /// Degrees where the cohomology is nonzero, ascending.
  std::vector<int> degrees() const;
  std::size_t dim(int d) const;
  std::map<int, std::size_t> dims() const;

  /// Cycle representing basis class k of H^d.
  const Vec& representative(int d, std::size_t k) const;
  /// Representative of a class given in H^d coordinates.
  Vec lift(int d, const Vec& cls) const;
  /// Class of a degree-d cycle in H^d coordinates; nullopt if x is not a cycle.
  std::optional<Vec> classify(int d, const Vec& x) const;
  bool is_cycle(int d, const Vec& x) const;
  bool is_boundary(int d, const Vec& x) const;
  /// Some y of degree d-1 with b_1(y) = x (free coordinates zero).
  std::optional<Vec> primitive(int d, const Vec& x) const;
  /// Bases (whole-space coordinates) of the cycles and boundaries of degree d.
  std::vector<Vec> cycle_basis(int d) const;
  std::vector<Vec> boundary_basis(int d) const;
  /// Class index of the unit, when src == dst and the unit survives.
  std::optional<std::size_t> unit_class() const noexcept { return unit_class_; }

 private:
  struct Degree {
    std::vector<std::size_t> idx;         // positions in hom of this degree
    std::vector<std::vector<Scalar>> cycles;      // local coordinates
    std::vector<std::vector<Scalar>> boundaries;  // echelon basis, local coordinates
    std::vector<Vec> reps;                // whole-space coordinates
    Matrix in_differential;               // b_1 from degree d-1, local coordinates
    Matrix out_differential;              // b_1 to degree d+1
    Matrix split;                         // columns: boundaries then reps
  };
  const Degree* at(int d) const;
  std::vector<Scalar> local(const Degree& g, const Vec& x) const;
  Vec global(const std::vector<std::size_t>& idx, const std::vector<Scalar>& v) const;

  FieldSpec field_;
  std::size_t src_;
  std::size_t dst_;
  std::size_t dim_;
  std::map<int, Degree> degrees_;
  std::map<int, std::vector<std::size_t>> idx_;
  std::optional<std::size_t> unit_class_;
};

/// Lazily computed HomCohomology for every pair of objects of a category.
/// Thread-safe; the category must outlive the cache.
class CohomologyCache {
 public:
  explicit CohomologyCache(const Category& c) : c_(c) {}
  const Category& category() const noexcept { return c_; }
  const HomCohomology& operator()(std::size_t src, std::size_t dst) const;

 private:
  const Category& c_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<HomCohomology>> cache_;
};

/// H*(c) with the induced composition m_2 (and m_1 = 0).
struct CohomologyCategory {
  std::shared_ptr<AInftyCategory> category;
  std::shared_ptr<CohomologyCache> homs;
};

/// Builds the cohomology category. Checks that products of cycles are cycles
/// and that boundaries compose into boundaries; throws PreconditionError otherwise.
CohomologyCategory cohomology_category(const Category& c);

/// True iff F passes verify_functor, H*(f_1) is the identity in the chosen
/// bases, and the target's m_3, ..., m_N vanish. F must map `source` into a
/// minimal category whose graded homs match H*(source).
bool check_formality_witness(const Category& source, const Functor& F, int N);

}  // namespace ainf
