#include "ainf/linalg.hpp"

#include "ainf/error.hpp"

namespace ainf {

Vec Vec::basis(FieldSpec field, std::size_t index) {
  Vec v(field);
  v.coords_.emplace(index, Scalar(field, 1));
  return v;
}

Scalar Vec::at(std::size_t index) const {
  auto it = coords_.find(index);
  return it == coords_.end() ? Scalar(field_) : it->second;
}

void Vec::add_term(std::size_t index, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

void Vec::add_scaled(const Vec& other, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  for (const auto& [i, c] : other.coords_) add_term(i, c * coeff);
}

Vec Vec::scaled(const Scalar& coeff) const {
  Vec r(field_);
  if (coeff.is_zero()) return r;
  for (const auto& [i, c] : coords_) r.coords_.emplace_hint(r.coords_.end(), i, c * coeff);
  return r;
}

Vec& Vec::operator+=(const Vec& o) {
  for (const auto& [i, c] : o.coords_) add_term(i, c);
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  for (const auto& [i, c] : o.coords_) add_term(i, -c);
  return *this;
}

Vec Vec::operator-() const { return scaled(Scalar(field_, -1)); }

std::vector<Scalar> Vec::dense(std::size_t n) const {
  std::vector<Scalar> out(n, Scalar(field_));
  for (const auto& [i, c] : coords_) {
    if (i >= n) throw PreconditionError("vector index out of range");
    out[i] = c;
  }
  return out;
}

Vec Vec::from_dense(FieldSpec field, const std::vector<Scalar>& v) {
  Vec r(field);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) r.coords_.emplace_hint(r.coords_.end(), i, v[i]);
  }
  return r;
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(field, 1);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols, const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw PreconditionError("dimension mismatch in matrix-vector product");
  std::vector<Scalar> y(rows_, Scalar(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
    }
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("dimension mismatch in matrix product");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        if (!o(k, c).is_zero()) out(r, c) += a * o(k, c);
      }
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(*this);
  for (auto& x : out.data_) x *= c;
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Echelon row_reduce(Matrix m) {
  Echelon e{std::move(m), {}};
  Matrix& a = e.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a(r, col).is_zero()) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r, c), a(pivot_row, c));
    }
    const Scalar inv = a(pivot_row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;
    for (std::size_t rr = 0; rr < a.rows(); ++rr) {
      if (rr == pivot_row || a(rr, col).is_zero()) continue;
      const Scalar factor = a(rr, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(pivot_row, c).is_zero()) a(rr, c) -= factor * a(pivot_row, c);
      }
    }
    e.pivot_cols.push_back(col);
    ++pivot_row;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  const Echelon e = row_reduce(m);
  const FieldSpec f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(f));
    v[free] = Scalar(f, 1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Scalar>> image_basis(const Matrix& m) {
  const Echelon e = row_reduce(m.transpose());
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t i = 0; i < e.rank(); ++i) basis.push_back(e.reduced.row(i));
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw PreconditionError("dimension mismatch in solve");
  const FieldSpec f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), Scalar(f));
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.reduced(i, m.cols());
  return x;
}

std::vector<std::vector<Scalar>> span_basis(FieldSpec field, std::size_t n,
                                            const std::vector<std::vector<Scalar>>& vectors) {
  if (vectors.empty()) return {};
  const Echelon e = row_reduce(Matrix::from_rows(field, n, vectors));
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t i = 0; i < e.rank(); ++i) basis.push_back(e.reduced.row(i));
  return basis;
}

bool in_span(FieldSpec field, const std::vector<std::vector<Scalar>>& generators, const std::vector<Scalar>& v) {
  bool zero = true;
  for (const auto& x : v) zero = zero && x.is_zero();
  if (zero) return true;
  if (generators.empty()) return false;
  Matrix cols(field, v.size(), generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (std::size_t r = 0; r < v.size(); ++r) cols(r, g) = generators[g][r];
  }
  return solve(cols, v).has_value();
}

}  // namespace ainf
