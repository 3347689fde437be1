#include "ainf/ainfty.hpp"

#include "ainf/error.hpp"

namespace ainf {

AInftyCategory::AInftyCategory(FieldSpec field, int max_arity) : field_(field), max_arity_(max_arity) {
  if (max_arity < 1) throw PreconditionError("max_arity must be at least 1");
}

std::size_t AInftyCategory::add_object(std::string name) {
  if (find_object(name)) throw PreconditionError("duplicate object '" + name + "'");
  names_.push_back(std::move(name));
  for (auto& row : homs_) row.emplace_back();
  homs_.emplace_back(names_.size());
  units_.emplace_back();
  zero_unit_.push_back(false);
  return names_.size() - 1;
}

std::size_t AInftyCategory::add_basis(std::size_t src, std::size_t dst, std::string label, int degree) {
  if (src >= names_.size() || dst >= names_.size()) throw PreconditionError("unknown object");
  if (!table_.empty()) throw PreconditionError("basis vectors must be added before operations");
  return homs_[src][dst].add(std::move(label), degree);
}

void AInftyCategory::set_unit(std::size_t obj, std::size_t index) {
  const auto& h = hom(obj, obj);
  if (index >= h.dim() || h.degree_of(index) != 0) throw PreconditionError("unit must be a degree-0 basis vector");
  units_.at(obj) = index;
}

void AInftyCategory::set_zero_unit(std::size_t obj) {
  if (hom(obj, obj).dim() != 0) throw PreconditionError("zero unit on an object with nonzero endomorphisms");
  units_.at(obj).reset();
  zero_unit_.at(obj) = true;
}

void AInftyCategory::complete_units(const std::string& prefix) {
  std::vector<std::size_t> added;
  for (std::size_t o = 0; o < names_.size(); ++o) {
    if (!units_[o] && !zero_unit_[o]) {
      if (!table_.empty()) throw PreconditionError("cannot add units after operations");
      units_[o] = homs_[o][o].add(prefix + names_[o], 0);
    }
  }
  for (std::size_t x = 0; x < names_.size(); ++x) {
    for (std::size_t y = 0; y < names_.size(); ++y) {
      const auto& h = homs_[x][y];
      if (!units_[x] || !units_[y]) continue;
      for (std::size_t k = 0; k < h.dim(); ++k) {
        const Arg g{x, y, k};
        set_m({g, Arg{x, x, *units_[x]}}, Vec::basis(field_, k));
        set_m({Arg{y, y, *units_[y]}, g}, Vec::basis(field_, k));
      }
    }
  }
}

void AInftyCategory::set_m(std::vector<Arg> args, Vec value) {
  check_chain(args);
  const int i = static_cast<int>(args.size());
  if (i > max_arity_) throw PreconditionError("operation arity exceeds max_arity");
  int deg = 2 - i;
  for (const auto& a : args) {
    if (a.index >= hom(a.src, a.dst).dim()) throw PreconditionError("basis index out of range");
    deg += degree(a);
  }
  const auto& out = hom(args.back().src, args.front().dst);
  for (const auto& [idx, c] : value) {
    if (idx >= out.dim() || out.degree_of(idx) != deg) {
      throw PreconditionError("m_" + std::to_string(i) + " entry " + describe_chain(*this, args) +
                              " does not have degree " + std::to_string(deg));
    }
  }
  auto it = table_.find(args);
  if (it != table_.end()) {
    table_.erase(it);
    --arity_entries_[i];
  }
  if (!value.is_zero()) {
    table_.emplace(std::move(args), std::move(value));
    ++arity_entries_[i];
  }
}

void AInftyCategory::clear_arity(int i) {
  for (auto it = table_.begin(); it != table_.end();) {
    if (static_cast<int>(it->first.size()) == i) {
      it = table_.erase(it);
    } else {
      ++it;
    }
  }
  arity_entries_.erase(i);
}

std::optional<std::size_t> AInftyCategory::unit_index(std::size_t obj) const { return units_.at(obj); }

std::optional<Arg> AInftyCategory::find_basis(std::size_t src, std::size_t dst, std::string_view label) const {
  auto k = hom(src, dst).find(label);
  if (!k) return std::nullopt;
  return Arg{src, dst, *k};
}

const GradedSpace& AInftyCategory::hom(std::size_t src, std::size_t dst) const { return homs_.at(src).at(dst); }

std::optional<Vec> AInftyCategory::unit(std::size_t obj) const {
  if (zero_unit_.at(obj)) return Vec(field_);
  if (!units_.at(obj)) return std::nullopt;
  return Vec::basis(field_, *units_[obj]);
}

Vec AInftyCategory::m(std::span<const Arg> args) const {
  check_chain(args);
  if (static_cast<int>(args.size()) > max_arity_) return Vec(field_);
  auto it = table_.find(std::vector<Arg>(args.begin(), args.end()));
  if (it == table_.end()) return Vec(field_);
  return it->second;
}

Vec AInftyCategory::b(std::span<const Arg> args) const {
  Vec z = m(args);
  if (z.is_zero()) return z;
  std::vector<int> deg;
  deg.reserve(args.size());
  for (const auto& a : args) deg.push_back(degree(a));
  return b_to_m_sign(deg) < 0 ? -z : z;
}

bool AInftyCategory::has_arity(int i) const {
  if (i < 1 || i > max_arity_) return false;
  auto it = arity_entries_.find(i);
  return it != arity_entries_.end() && it->second > 0;
}

bool operator==(const AInftyCategory& a, const AInftyCategory& b) {
  return a.field_ == b.field_ && a.max_arity_ == b.max_arity_ && a.names_ == b.names_ && a.homs_ == b.homs_ &&
         a.units_ == b.units_ && a.zero_unit_ == b.zero_unit_ && a.table_ == b.table_;
}

}  // namespace ainf
