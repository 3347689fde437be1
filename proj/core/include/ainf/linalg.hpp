#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ainf/field.hpp"

namespace ainf {

/// Sparse coordinate vector over a basis indexed by std::size_t.
/// Zero coefficients are never stored.
class Vec {
 public:
  using Map = std::map<std::size_t, Scalar>;

  explicit Vec(FieldSpec field = FieldSpec::rationals()) : field_(field) {}

  static Vec basis(FieldSpec field, std::size_t index);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coords_.empty(); }
  std::size_t support_size() const noexcept { return coords_.size(); }

  Scalar at(std::size_t index) const;
  void add_term(std::size_t index, const Scalar& coeff);
  void add_scaled(const Vec& other, const Scalar& coeff);
  Vec scaled(const Scalar& coeff) const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec operator-() const;
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }

  Map::const_iterator begin() const { return coords_.begin(); }
  Map::const_iterator end() const { return coords_.end(); }

  /// Dense copy of length n.
  std::vector<Scalar> dense(std::size_t n) const;
  static Vec from_dense(FieldSpec field, const std::vector<Scalar>& v);

 private:
  FieldSpec field_;
  Map coords_;
};

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() : Matrix(FieldSpec::rationals(), 0, 0) {}
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_rows(FieldSpec field, std::size_t cols, const std::vector<std::vector<Scalar>>& rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  Matrix scaled(const Scalar& c) const;
  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// in the current column scanning rows top-down, so results are reproducible.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in reduced form
/// (free coordinate 1, other free coordinates 0).
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// Echelon basis of the column space (returned as vectors of length rows()).
std::vector<std::vector<Scalar>> image_basis(const Matrix& m);

/// Some x with m x = b, free coordinates set to zero; nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

/// Echelon basis of the span of the given vectors (each of length n).
std::vector<std::vector<Scalar>> span_basis(FieldSpec field, std::size_t n,
                                            const std::vector<std::vector<Scalar>>& vectors);

/// True iff v lies in the span of `generators`.
bool in_span(FieldSpec field, const std::vector<std::vector<Scalar>>& generators, const std::vector<Scalar>& v);

}  // namespace ainf
