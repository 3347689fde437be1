#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ainf/graded.hpp"

namespace ainf {

/// Basis vector `index` of hom(src, dst).
struct Arg {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::size_t index = 0;
  friend auto operator<=>(const Arg&, const Arg&) = default;
};

/// Homogeneous morphism src → dst with coordinates in hom(src, dst).
struct Morphism {
  std::size_t src = 0;
  std::size_t dst = 0;
  int degree = 0;
  Vec coords;

  bool is_zero() const noexcept { return coords.is_zero(); }
};

/// A finite A∞-category seen through its operations.
///
/// Operations are evaluated in the unshifted picture: for a chain
/// x_i, ..., x_1 (stored leftmost first, so args[0] = x_i is applied last)
/// b(args) returns the element z with s z = b_i(s x_i, ..., s x_1).
/// It has degree Σ|x_k| + 2 - i, the same as m_i.
class Category {
 public:
  virtual ~Category() = default;

  virtual FieldSpec field() const = 0;
  virtual std::size_t object_count() const = 0;
  virtual std::string object_name(std::size_t obj) const = 0;
  virtual const GradedSpace& hom(std::size_t src, std::size_t dst) const = 0;
  /// Operations of higher arity are not part of the data.
  virtual int max_arity() const = 0;
  /// Coordinates of the strict unit in hom(obj, obj), if the category has one.
  virtual std::optional<Vec> unit(std::size_t obj) const = 0;

  /// b-side operation on a composable chain of basis vectors. Zero when the
  /// arity exceeds max_arity().
  virtual Vec b(std::span<const Arg> args) const = 0;
  /// m-side operation; by default converted from b().
  virtual Vec m(std::span<const Arg> args) const;

  /// False only if every operation of this arity is known to vanish.
  virtual bool has_arity(int i) const { return i >= 1 && i <= max_arity(); }

  int degree(const Arg& a) const { return hom(a.src, a.dst).degree_of(a.index); }
  std::optional<std::size_t> find_object(std::string_view name) const;
};

/// Throws PreconditionError unless args is nonempty and composable.
void check_chain(std::span<const Arg> args);

/// Sign ε with b_i(s x_i, ..., s x_1) = ε s m_i(x_i, ..., x_1) (degrees leftmost first).
/// With the Koszul rule this reproduces b_1 = -s m_1, b_2(sg, sf) = (-1)^{|g|} s m_2(g, f)
/// and b_3(sh, sg, sf) = -(-1)^{|g|} s m_3(h, g, f).
int b_to_m_sign(std::span<const int> degrees);

/// Sign of f_i = s g_i ω^{⊗i} on arguments of the given degrees (leftmost first).
int functor_shift_sign(std::span<const int> degrees);

Morphism zero_morphism(const Category& c, std::size_t src, std::size_t dst, int degree);
Morphism basis_morphism(const Category& c, const Arg& a);
Morphism unit_morphism(const Category& c, std::size_t obj);

/// Multilinear extension of b (resp. m) to arbitrary homogeneous morphisms.
Morphism apply_b(const Category& c, std::span<const Morphism> args);
Morphism apply_m(const Category& c, std::span<const Morphism> args);

/// Calls f on every composable chain of basis vectors of the given arity.
void for_each_chain(const Category& c, int arity, const std::function<void(std::span<const Arg>)>& f);
/// Same, restricted to chains with the given source and target objects.
void for_each_chain(const Category& c, int arity, std::size_t src, std::size_t dst,
                    const std::function<void(std::span<const Arg>)>& f);

/// Left side of relation (*)_i on a basis chain, evaluated through b().
Vec relation_residual_b(const Category& c, std::span<const Arg> args);
/// Same relation through m() and the m-side signs (-1)^{j+kl}.
Vec relation_residual_m(const Category& c, std::span<const Arg> args);

enum class Verdict { pass, fail, unknown };
std::string to_string(Verdict v);

struct Failure {
  int arity = 0;
  std::vector<Arg> args;
  Vec residual;
  std::string what;
};

struct Report {
  Verdict verdict = Verdict::pass;
  int checked_up_to = 0;
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  // first few only

  bool ok() const noexcept { return verdict == Verdict::pass; }
  void add_failure(Failure f);
};

/// Relations (*)_1 ... (*)_k on every basis chain. k beyond max_arity() is
/// reported as unknown (after checking everything that can be checked).
Report verify_relations(const Category& c, int up_to_arity);
Report verify_relations_m(const Category& c, int up_to_arity);

/// Strict unit axioms on every basis vector, for all arities up to max_arity().
Report verify_units(const Category& c);
/// Same, stopping at the given arity.
Report verify_units(const Category& c, int up_to_arity);

std::string describe_chain(const Category& c, std::span<const Arg> args);
std::string describe(const Category& c, const Morphism& x);

}  // namespace ainf
