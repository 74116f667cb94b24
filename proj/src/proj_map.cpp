#include "cotstruct/proj_map.hpp"

#include <stdexcept>

namespace cotstruct {

std::size_t summand_path_dim(const PathAlgebra& algebra, const ProjSummands& s) {
  std::size_t d = 0;
  for (int v : s) d += algebra.projective_dim(v);
  return d;
}

ProjMap ProjMap::zero(AlgebraPtr algebra, ProjSummands dst, ProjSummands src) {
  std::vector<AlgebraElement> entries(dst.size() * src.size(), algebra->zero());
  return ProjMap(std::move(algebra), std::move(dst), std::move(src), std::move(entries));
}

ProjMap ProjMap::identity(AlgebraPtr algebra, ProjSummands summands) {
  ProjMap m = zero(algebra, summands, summands);
  for (std::size_t i = 0; i < summands.size(); ++i) m.set(i, i, algebra->idempotent(summands[i]));
  return m;
}

ProjMap::ProjMap(AlgebraPtr algebra, ProjSummands dst, ProjSummands src, std::vector<AlgebraElement> entries)
    : algebra_(std::move(algebra)), dst_(std::move(dst)), src_(std::move(src)), entries_(std::move(entries)) {
  if (entries_.size() != dst_.size() * src_.size()) throw std::invalid_argument("block entry count mismatch");
  for (std::size_t t = 0; t < dst_.size(); ++t)
    for (std::size_t s = 0; s < src_.size(); ++s)
      if (!at(t, s).supported_in_hom(src_[s], dst_[t]))
        throw std::invalid_argument("block entry outside e_j*A*e_i at row " + std::to_string(t) + ", col " +
                                    std::to_string(s));
}

void ProjMap::set(std::size_t t, std::size_t s, AlgebraElement x) {
  if (!x.supported_in_hom(src_[s], dst_[t]))
    throw std::invalid_argument("block entry outside e_j*A*e_i");
  entries_[t * src_.size() + s] = std::move(x);
}

ProjMap ProjMap::compose(const ProjMap& inner) const {
  if (inner.dst_ != src_) throw std::invalid_argument("compose: summand mismatch");
  ProjMap out = zero(algebra_, dst_, inner.src_);
  for (std::size_t t = 0; t < dst_.size(); ++t)
    for (std::size_t s = 0; s < inner.src_.size(); ++s) {
      AlgebraElement acc = algebra_->zero();
      for (std::size_t m = 0; m < src_.size(); ++m) {
        const AlgebraElement& x = at(t, m);
        const AlgebraElement& y = inner.at(m, s);
        if (x.is_zero() || y.is_zero()) continue;
        acc = acc + x * y;
      }
      out.set(t, s, std::move(acc));
    }
  return out;
}

ProjMap ProjMap::operator+(const ProjMap& o) const {
  if (src_ != o.src_ || dst_ != o.dst_) throw std::invalid_argument("sum: summand mismatch");
  std::vector<AlgebraElement> entries;
  entries.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) entries.push_back(entries_[i] + o.entries_[i]);
  return ProjMap(algebra_, dst_, src_, std::move(entries));
}

ProjMap ProjMap::operator-(const ProjMap& o) const { return *this + o.negate(); }

ProjMap ProjMap::negate() const {
  std::vector<AlgebraElement> entries;
  entries.reserve(entries_.size());
  for (const auto& e : entries_) entries.push_back(-e);
  return ProjMap(algebra_, dst_, src_, std::move(entries));
}

ProjMap ProjMap::scale(const Scalar& c) const {
  std::vector<AlgebraElement> entries;
  entries.reserve(entries_.size());
  for (const auto& e : entries_) entries.push_back(e.scale(c));
  return ProjMap(algebra_, dst_, src_, std::move(entries));
}

bool ProjMap::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

ProjMap ProjMap::hconcat(const ProjMap& right) const {
  if (dst_ != right.dst_) throw std::invalid_argument("hconcat: dst mismatch");
  ProjSummands src = src_;
  src.insert(src.end(), right.src_.begin(), right.src_.end());
  ProjMap out = zero(algebra_, dst_, src);
  for (std::size_t t = 0; t < dst_.size(); ++t) {
    for (std::size_t s = 0; s < src_.size(); ++s) out.set(t, s, at(t, s));
    for (std::size_t s = 0; s < right.src_.size(); ++s) out.set(t, src_.size() + s, right.at(t, s));
  }
  return out;
}

ProjMap ProjMap::vconcat(const ProjMap& below) const {
  if (src_ != below.src_) throw std::invalid_argument("vconcat: src mismatch");
  ProjSummands dst = dst_;
  dst.insert(dst.end(), below.dst_.begin(), below.dst_.end());
  ProjMap out = zero(algebra_, dst, src_);
  for (std::size_t s = 0; s < src_.size(); ++s) {
    for (std::size_t t = 0; t < dst_.size(); ++t) out.set(t, s, at(t, s));
    for (std::size_t t = 0; t < below.dst_.size(); ++t) out.set(dst_.size() + t, s, below.at(t, s));
  }
  return out;
}

ProjMap ProjMap::submap(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
  ProjSummands dst, src;
  for (std::size_t t : row_idx) dst.push_back(dst_[t]);
  for (std::size_t s : col_idx) src.push_back(src_[s]);
  ProjMap out = zero(algebra_, dst, src);
  for (std::size_t t = 0; t < row_idx.size(); ++t)
    for (std::size_t s = 0; s < col_idx.size(); ++s) out.set(t, s, at(row_idx[t], col_idx[s]));
  return out;
}

Matrix ProjMap::to_field_matrix() const {
  std::size_t rows = summand_path_dim(*algebra_, dst_);
  std::size_t cols = summand_path_dim(*algebra_, src_);
  Matrix m(algebra_->field(), rows, cols);
  std::size_t row0 = 0;
  for (std::size_t t = 0; t < dst_.size(); ++t) {
    std::size_t col0 = 0;
    for (std::size_t s = 0; s < src_.size(); ++s) {
      Matrix block = algebra_->element_to_matrix(at(t, s), src_[s], dst_[t]);
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) m.set(row0 + r, col0 + c, block.at(r, c));
      col0 += algebra_->projective_dim(src_[s]);
    }
    row0 += algebra_->projective_dim(dst_[t]);
  }
  return m;
}

bool operator==(const ProjMap& a, const ProjMap& b) {
  return *a.algebra_ == *b.algebra_ && a.src_ == b.src_ && a.dst_ == b.dst_ && a.entries_ == b.entries_;
}

}  // namespace cotstruct
