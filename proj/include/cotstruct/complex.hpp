#pragma once

#include <map>

#include "cotstruct/proj_map.hpp"

namespace cotstruct {

/// Bounded cochain complex of finite direct sums of indecomposable
/// projectives. d^{n+1} o d^n = 0 and idempotent compatibility of every
/// differential block are checked on construction. The zero complex is the
/// one with no terms.
class Complex {
 public:
  static Complex zero(AlgebraPtr algebra);
  static Complex stalk(AlgebraPtr algebra, ProjSummands summands, int degree);
  Complex(AlgebraPtr algebra, std::map<int, ProjSummands> terms, std::map<int, ProjMap> diffs);

  const AlgebraPtr& algebra() const { return algebra_; }
  bool empty() const { return terms_.empty(); }
  const std::map<int, ProjSummands>& terms() const { return terms_; }

  /// Summand list in the given degree (empty when the term vanishes).
  ProjSummands term(int n) const;
  /// d^n as a block matrix; a zero map of the right shape when absent.
  ProjMap diff(int n) const;

  int lowest_degree() const;   // throws on the zero complex
  int highest_degree() const;  // throws on the zero complex
  /// Number of degrees carrying a term (0 for the zero complex).
  int degree_span() const;

  std::size_t total_path_dim() const;

  friend bool operator==(const Complex& a, const Complex& b);
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

 private:
  AlgebraPtr algebra_;
  std::map<int, ProjSummands> terms_;
  std::map<int, ProjMap> diffs_;
};

/// Degree shift: (suspend(X, n))^k = X^{k+n}, differential scaled by (-1)^n.
Complex suspend(const Complex& x, int n);

/// Degree-wise dim ker(d^n) / im(d^{n-1}) over the field, after expanding the
/// projectives into path bases. Zero entries are omitted.
std::map<int, std::size_t> cohomology_dims(const Complex& x);

}  // namespace cotstruct
