#pragma once

#include <vector>

#include "cotstruct/path_algebra.hpp"

namespace cotstruct {

/// Ordered list of vertex indices; each entry is one copy of the
/// indecomposable projective P_v. The order fixes row/column conventions.
using ProjSummands = std::vector<int>;

std::size_t summand_path_dim(const PathAlgebra& algebra, const ProjSummands& s);

/// Module map between finite direct sums of indecomposable projectives,
/// stored as a block matrix of algebra elements: entry (t, s) lies in
/// e_{dst[t]} * A * e_{src[s]} and acts by left multiplication.
class ProjMap {
 public:
  static ProjMap zero(AlgebraPtr algebra, ProjSummands dst, ProjSummands src);
  static ProjMap identity(AlgebraPtr algebra, ProjSummands summands);
  ProjMap(AlgebraPtr algebra, ProjSummands dst, ProjSummands src, std::vector<AlgebraElement> entries);

  const AlgebraPtr& algebra() const { return algebra_; }
  const ProjSummands& src() const { return src_; }
  const ProjSummands& dst() const { return dst_; }

  const AlgebraElement& at(std::size_t t, std::size_t s) const { return entries_[t * src_.size() + s]; }
  void set(std::size_t t, std::size_t s, AlgebraElement x);

  ProjMap compose(const ProjMap& inner) const;  // this o inner
  ProjMap operator+(const ProjMap& o) const;
  ProjMap operator-(const ProjMap& o) const;
  ProjMap negate() const;
  ProjMap scale(const Scalar& c) const;
  bool is_zero() const;

  /// [this | right]: same dst, concatenated src.
  ProjMap hconcat(const ProjMap& right) const;
  /// [this ; below]: same src, concatenated dst.
  ProjMap vconcat(const ProjMap& below) const;
  /// Sub-block with the given row/column summand index sets.
  ProjMap submap(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;

  /// Expansion over the path bases of the summands.
  Matrix to_field_matrix() const;

  friend bool operator==(const ProjMap& a, const ProjMap& b);

 private:
  AlgebraPtr algebra_;
  ProjSummands dst_, src_;
  std::vector<AlgebraElement> entries_;  // row-major dst x src
};

}  // namespace cotstruct
