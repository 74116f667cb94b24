#pragma once

#include <optional>
#include <vector>

#include "cotstruct/chain_map.hpp"

namespace cotstruct {

/// Degree-(-1) homotopy witness: components h^k : X^k -> Y^{k+shift-1}
/// certifying f = d_{Sigma^shift Y} h + h d_X.
struct Homotopy {
  Complex src, tgt;
  int shift;
  std::map<int, ProjMap> components;
};

/// A basis of Hom in the homotopy category: chain maps X -> Sigma^shift Y
/// modulo null-homotopic ones. dimension() = ambient - boundary = #reps.
struct HomSpaceBasis {
  std::size_t ambient_dimension = 0;
  std::size_t boundary_dimension = 0;
  std::vector<ChainMap> representatives;

  std::size_t dimension() const { return representatives.size(); }
};

/// Hom-space of (X, Y, shift) with the solved linear systems kept around so
/// classes of further maps can be expressed in the chosen basis.
class HomSpace {
 public:
  static HomSpace compute(const Complex& x, const Complex& y, int shift);

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t boundary_dimension() const { return boundary_; }
  std::size_t dimension() const { return reps_.size(); }
  const std::vector<ChainMap>& representatives() const { return reps_; }
  HomSpaceBasis basis() const { return HomSpaceBasis{ambient_, boundary_, reps_}; }

  /// Coordinates of the homotopy class of f in the representative basis.
  std::vector<Scalar> class_coordinates(const ChainMap& f) const;

 private:
  Complex x_, y_;
  int shift_;
  std::size_t ambient_ = 0, boundary_ = 0;
  std::vector<ChainMap> reps_;
  Matrix decomposer_;  // [boundary columns | representative columns]
  std::size_t boundary_cols_ = 0;

  HomSpace(Complex x, Complex y, int shift)
      : x_(std::move(x)), y_(std::move(y)), shift_(shift), decomposer_(x_.algebra()->field(), 0, 0) {}
};

HomSpaceBasis hom_space(const Complex& x, const Complex& y, int shift);

/// dim Hom_K(X, Sigma^shift Y) without extracting representatives. Both
/// complexes are replaced by their minimal models first.
std::size_t hom_dimension(const Complex& x, const Complex& y, int shift);

/// Homotopy witness for f, or empty when f is not null-homotopic. A returned
/// witness is re-verified exactly before being handed out.
std::optional<Homotopy> is_null_homotopic(const ChainMap& f);

/// True iff the identity of X is null-homotopic.
bool is_contractible(const Complex& x);

/// Smallest shift n for which a chain map X -> Sigma^n Y can be nonzero for
/// degree-support reasons, and the largest; empty when either complex is zero.
std::optional<std::pair<int, int>> hom_shift_window(const Complex& x, const Complex& y);

}  // namespace cotstruct
