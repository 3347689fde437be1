#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ainf {

/// The base field: either the rationals or a prime field F_p.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  /// Throws FieldError unless p is prime.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  /// "Q" or "F_p".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept as reduced fractions with
/// positive denominator, residues in [0, p).
class Scalar {
 public:
  explicit Scalar(FieldSpec field = FieldSpec::rationals(), long value = 0);
  Scalar(FieldSpec field, const mpq_class& value);

  /// Parses "n", "-n", "n/d". Throws FieldError on malformed text or zero denominator.
  static Scalar parse(FieldSpec field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Numerator/denominator view; for F_p the residue over 1.
  mpq_class to_rational() const;
  std::uint64_t residue() const noexcept { return residue_; }

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws FieldError when the fields differ.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Reduced text form, e.g. "-3/4" or "2".
  std::string to_string() const;

  /// Returns the canonical representative (already canonical after every operation).
  Scalar canonical() const;

 private:
  void check_same(const Scalar& o) const;

  FieldSpec field_;
  mpq_class value_;             // rationals only
  std::uint64_t residue_ = 0;   // prime fields only
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace ainf
