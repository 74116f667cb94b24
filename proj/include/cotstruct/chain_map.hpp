#pragma once

#include "cotstruct/complex.hpp"

namespace cotstruct {

/// Chain map X -> Sigma^shift Y, stored as per-degree blocks
/// f^k : X^k -> Y^{k+shift}. The twisted commuting condition
/// (-1)^shift d_Y^{k+shift} o f^k = f^{k+1} o d_X^k is checked on
/// construction. Zero components are not stored.
class ChainMap {
 public:
  static ChainMap zero(Complex src, Complex tgt, int shift);
  static ChainMap identity(const Complex& x);
  ChainMap(Complex src, Complex tgt, int shift, std::map<int, ProjMap> components);

  const Complex& src() const { return src_; }
  const Complex& tgt() const { return tgt_; }
  int shift() const { return shift_; }
  const std::map<int, ProjMap>& components() const { return comps_; }

  /// f^k, a zero map of the right shape when absent.
  ProjMap component(int k) const;

  ChainMap operator+(const ChainMap& o) const;
  ChainMap operator-(const ChainMap& o) const;
  ChainMap negate() const;
  ChainMap scale(const Scalar& c) const;
  bool is_zero() const { return comps_.empty(); }

  friend bool operator==(const ChainMap& a, const ChainMap& b);

 private:
  Complex src_, tgt_;
  int shift_;
  std::map<int, ProjMap> comps_;
};

/// g o f for f : X -> Sigma^s Y and g : Y -> Sigma^t Z, meaning
/// Sigma^s(g) o f : X -> Sigma^{s+t} Z. Componentwise (g o f)^k = g^{k+s} f^k.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Sigma^m f : Sigma^m X -> Sigma^{shift}(Sigma^m Y); components shift, no sign.
ChainMap suspend(const ChainMap& f, int m);

}  // namespace cotstruct
