#include "cotstruct/matrix.hpp"

#include <utility>

namespace cotstruct {

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (y.is_zero()) continue;
        r.set(i, j, r.at(i, j) + x * y);
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix Matrix::negate() const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack: row mismatch");
  Matrix r(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (std::size_t j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix r(field_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(rows_ + i, j, o.at(i, j));
  return r;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix r(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) r.set(i, 0, at(i, c));
  return r;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) r.set(i, j, at(i, idx[j]));
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Rref rref(const Matrix& m) {
  Matrix w = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    std::size_t piv = r;
    while (piv < w.rows() && w.at(piv, c).is_zero()) ++piv;
    if (piv == w.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < w.cols(); ++j) {
        Scalar tmp = w.at(r, j);
        w.set(r, j, w.at(piv, j));
        w.set(piv, j, std::move(tmp));
      }
    Scalar inv = w.at(r, c).inverse();
    for (std::size_t j = c; j < w.cols(); ++j) w.set(r, j, w.at(r, j) * inv);
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i == r) continue;
      Scalar f = w.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < w.cols(); ++j) w.set(i, j, w.at(i, j) - f * w.at(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(w), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  // forward elimination only; enough for the rank
  Matrix w = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    std::size_t piv = r;
    while (piv < w.rows() && w.at(piv, c).is_zero()) ++piv;
    if (piv == w.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < w.cols(); ++j) {
        Scalar tmp = w.at(r, j);
        w.set(r, j, w.at(piv, j));
        w.set(piv, j, std::move(tmp));
      }
    Scalar inv = w.at(r, c).inverse();
    for (std::size_t i = r + 1; i < w.rows(); ++i) {
      Scalar f = w.at(i, c);
      if (f.is_zero()) continue;
      f = f * inv;
      for (std::size_t j = c; j < w.cols(); ++j) w.set(i, j, w.at(i, j) - f * w.at(r, j));
    }
    ++r;
  }
  return r;
}

Matrix kernel_basis(const Matrix& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix k(m.field(), m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    k.set(fc, j, Scalar::one(m.field()));
    for (std::size_t i = 0; i < rr.rank; ++i) k.set(rr.pivot_cols[i], j, -rr.reduced.at(i, fc));
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong height");
  Rref rr = rref(m.hstack(b));
  // inconsistent iff some pivot falls in the b-part
  for (std::size_t c : rr.pivot_cols)
    if (c >= m.cols()) return std::nullopt;
  Matrix x(m.field(), m.cols(), b.cols());
  for (std::size_t i = 0; i < rr.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(rr.pivot_cols[i], j, rr.reduced.at(i, m.cols() + j));
  return x;
}

std::size_t quotient_dimension(const Matrix& sub, const Matrix& ambient) {
  if (sub.rows() != ambient.rows()) throw std::invalid_argument("quotient_dimension: ambient space mismatch");
  std::size_t ra = rank(ambient);
  if (rank(ambient.hstack(sub)) != ra) throw std::invalid_argument("subspace not contained");
  return ra - rank(sub);
}

}  // namespace cotstruct
