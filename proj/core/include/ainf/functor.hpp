#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "ainf/ainfty.hpp"

namespace ainf {

/// A_m-functor between two categories.
///
/// f(args) is the unshifted component: the element z with
/// s z = f_i(s x_i, ..., s x_1), of degree Σ|x_k| + 1 - i.
class Functor {
 public:
  virtual ~Functor() = default;

  virtual const Category& source() const = 0;
  virtual const Category& target() const = 0;
  virtual int arity() const = 0;
  virtual std::size_t map_object(std::size_t obj) const = 0;
  /// Zero beyond arity().
  virtual Vec f(std::span<const Arg> args) const = 0;
  virtual bool has_arity(int i) const { return i >= 1 && i <= arity(); }
};

/// Multilinear extension of f to homogeneous morphisms.
Morphism apply_f(const Functor& F, std::span<const Morphism> args);

/// Functor given by sparse tables of the m-side components g_i (|g_i| = 1 - i).
class TableFunctor : public Functor {
 public:
  using Table = std::map<std::vector<Arg>, Vec>;

  TableFunctor(std::shared_ptr<const Category> source, std::shared_ptr<const Category> target, int arity,
               std::vector<std::size_t> object_map);

  /// Overwrites g_i on a basis chain of the source; checks the degree.
  void set_g(std::vector<Arg> args, Vec value);
  Vec g(std::span<const Arg> args) const;
  const Table& table() const noexcept { return table_; }

  const Category& source() const override { return *source_; }
  const Category& target() const override { return *target_; }
  int arity() const override { return arity_; }
  std::size_t map_object(std::size_t obj) const override { return object_map_.at(obj); }
  Vec f(std::span<const Arg> args) const override;
  bool has_arity(int i) const override;

 private:
  std::shared_ptr<const Category> source_;
  std::shared_ptr<const Category> target_;
  int arity_;
  std::vector<std::size_t> object_map_;
  Table table_;
  std::map<int, std::size_t> arity_entries_;
};

class IdentityFunctor : public Functor {
 public:
  IdentityFunctor(std::shared_ptr<const Category> c, int arity) : c_(std::move(c)), arity_(arity) {}

  const Category& source() const override { return *c_; }
  const Category& target() const override { return *c_; }
  int arity() const override { return arity_; }
  std::size_t map_object(std::size_t obj) const override { return obj; }
  Vec f(std::span<const Arg> args) const override;
  bool has_arity(int i) const override { return i == 1; }

 private:
  std::shared_ptr<const Category> c_;
  int arity_;
};

/// G ∘ F, with (G∘F)_n = Σ G_r(F_{i_1}, ..., F_{i_r}) over i_1 + ... + i_r = n.
class CompositeFunctor : public Functor {
 public:
  CompositeFunctor(std::shared_ptr<const Functor> g, std::shared_ptr<const Functor> f);

  const Category& source() const override { return f_->source(); }
  const Category& target() const override { return g_->target(); }
  int arity() const override { return std::min(f_->arity(), g_->arity()); }
  std::size_t map_object(std::size_t obj) const override { return g_->map_object(f_->map_object(obj)); }
  Vec f(std::span<const Arg> args) const override;

 private:
  std::shared_ptr<const Functor> g_;
  std::shared_ptr<const Functor> f_;
};

/// Throws PreconditionError when target(F) is not source(G) (compared by identity).
std::shared_ptr<const Functor> compose_functors(std::shared_ptr<const Functor> g, std::shared_ptr<const Functor> f);

/// Both sides of the functor relation on one basis chain; returns LHS - RHS.
Vec functor_residual(const Functor& F, std::span<const Arg> args);

/// Functor relations up to min(up_to, arity) plus the unit conditions.
/// Asking for more than arity() yields unknown.
Report verify_functor(const Functor& F, int up_to_arity);
inline Report verify_functor(const Functor& F) { return verify_functor(F, F.arity()); }

struct RandomFunctorOptions {
  /// Probability that a non-unit chain gets a nonzero higher component.
  double density = 0.5;
  /// Coefficients are drawn from [-range, range] \ {0}.
  int range = 3;
};

struct TransportedStructure {
  std::shared_ptr<AInftyCategory> target;
  std::shared_ptr<TableFunctor> functor;
};

/// Draws a random strictly unital A_m-functor out of `source` whose first
/// component is diagonal and invertible, and builds the A_m-structure on the
/// same graded homs for which it is a functor (the target m_n are solved
/// arity by arity from the functor relation). Requires source.max_arity() ≥ m.
TransportedStructure random_transported_functor(std::shared_ptr<const AInftyCategory> source, int m,
                                                std::mt19937_64& rng, const RandomFunctorOptions& opts = {});

}  // namespace ainf
