#include "ainf/field.hpp"

#include <charconv>

#include "ainf/error.hpp"

namespace ainf {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1ULL << 62)) throw FieldError("characteristic " + std::to_string(p) + " is too large");
  return FieldSpec(p);
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field_.is_rational()) {
    value_ = value;
  } else {
    residue_ = reduce(mpz_class(value), field_.characteristic());
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    value_ = value;
    value_.canonicalize();
  } else {
    const std::uint64_t p = field_.characteristic();
    std::uint64_t den = reduce(value.get_den(), p);
    if (den == 0) throw FieldError("denominator vanishes in " + field_.name());
    residue_ = mul_mod(reduce(value.get_num(), p), pow_mod(den, p - 2, p), p);
  }
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw FieldError("empty scalar");
  mpq_class q;
  std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw FieldError("malformed scalar '" + s + "'");
  }
  if (num[0] == '+') num.erase(num.begin());
  mpz_class n(num), d(den);
  if (d == 0) throw FieldError("zero denominator in '" + s + "'");
  q = mpq_class(n, d);
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? value_ == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? value_ == 1 : residue_ == 1;
}

mpq_class Scalar::to_rational() const {
  if (field_.is_rational()) return value_;
  return mpq_class(mpz_class(static_cast<unsigned long>(residue_)));
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw FieldError("mixed fields: " + field_.name() + " and " + o.field_.name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("inverse of zero");
  Scalar r(field_);
  if (field_.is_rational()) {
    r.value_ = 1 / value_;
    r.value_.canonicalize();
  } else {
    const std::uint64_t p = field_.characteristic();
    r.residue_ = pow_mod(residue_, p - 2, p);
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (field_.is_rational()) {
    r.value_ = -value_;
  } else if (residue_ != 0) {
    r.residue_ = field_.characteristic() - residue_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    value_ += o.value_;
  } else {
    const std::uint64_t p = field_.characteristic();
    residue_ = static_cast<std::uint64_t>((static_cast<u128>(residue_) + o.residue_) % p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    value_ *= o.value_;
  } else {
    residue_ = mul_mod(residue_, o.residue_, field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) throw FieldError("division by zero");
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.field_.is_rational() ? a.value_ == b.value_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return value_.get_str();
  return std::to_string(residue_);
}

Scalar Scalar::canonical() const {
  Scalar r(*this);
  if (field_.is_rational()) r.value_.canonicalize();
  return r;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ainf
