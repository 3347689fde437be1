#pragma once

#include <map>
#include <string>
#include <vector>

#include "ainf/category.hpp"

namespace ainf {

/// A∞-category given by explicit sparse m-tables.
///
/// Entries are keyed by basis chains (leftmost first); unspecified entries
/// are zero. Unit compositions m_2(id, g) = g, m_2(f, id) = f are ordinary
/// table entries, see complete_units().
class AInftyCategory : public Category {
 public:
  using Table = std::map<std::vector<Arg>, Vec>;

  AInftyCategory(FieldSpec field, int max_arity);

  std::size_t add_object(std::string name);
  std::size_t add_basis(std::size_t src, std::size_t dst, std::string label, int degree);
  /// Marks a degree-0 basis vector of hom(obj, obj) as the unit.
  void set_unit(std::size_t obj, std::size_t index);
  /// Declares the unit of obj to be zero; only allowed when hom(obj, obj) = 0.
  void set_zero_unit(std::size_t obj);
  bool has_zero_unit(std::size_t obj) const { return zero_unit_.at(obj); }
  /// Adds id_X to every object lacking a unit and stores the unit m_2 entries.
  void complete_units(const std::string& prefix = "id_");

  /// Overwrites m_i on a basis chain; checks composability and |m_i| = 2 - i.
  void set_m(std::vector<Arg> args, Vec value);
  void clear_arity(int i);
  void set_max_arity(int n) { max_arity_ = n; }

  const Table& table() const noexcept { return table_; }
  std::optional<std::size_t> unit_index(std::size_t obj) const;
  std::optional<Arg> find_basis(std::size_t src, std::size_t dst, std::string_view label) const;

  FieldSpec field() const override { return field_; }
  std::size_t object_count() const override { return names_.size(); }
  std::string object_name(std::size_t obj) const override { return names_.at(obj); }
  const GradedSpace& hom(std::size_t src, std::size_t dst) const override;
  int max_arity() const override { return max_arity_; }
  std::optional<Vec> unit(std::size_t obj) const override;
  Vec b(std::span<const Arg> args) const override;
  Vec m(std::span<const Arg> args) const override;
  bool has_arity(int i) const override;

  friend bool operator==(const AInftyCategory& a, const AInftyCategory& b);

 private:
  FieldSpec field_;
  int max_arity_;
  std::vector<std::string> names_;
  std::vector<std::vector<GradedSpace>> homs_;
  std::vector<std::optional<std::size_t>> units_;
  std::vector<bool> zero_unit_;
  Table table_;
  std::map<int, std::size_t> arity_entries_;
};

}  // namespace ainf
