#pragma once

#include "cotstruct/chain_map.hpp"
#include "cotstruct/path_algebra.hpp"

namespace cotstruct::testing {

inline AlgebraPtr trivial_algebra(Field f = Field::prime(5)) {
  return PathAlgebra::make(Quiver({"1"}, {}), f);
}

inline AlgebraPtr a2_algebra(Field f = Field::prime(5)) {
  return PathAlgebra::make(Quiver({"1", "2"}, {{"a", "1", "2"}}), f);
}

inline Complex k_stalk(const AlgebraPtr& a, int degree) { return Complex::stalk(a, {0}, degree); }

/// Complex with one summand in each of two consecutive degrees and the given
/// scalar multiple of a trivial-path differential.
inline Complex two_term(const AlgebraPtr& a, int low_degree, int vertex, long long coeff) {
  ProjMap d = ProjMap::zero(a, {vertex}, {vertex});
  d.set(0, 0, a->idempotent(vertex).scale(Scalar::of_int(a->field(), coeff)));
  return Complex(a, {{low_degree, {vertex}}, {low_degree + 1, {vertex}}}, {{low_degree, d}});
}

/// [P_1 --a--> P_2] over the A2 quiver, starting at the given degree.
inline Complex arrow_complex(const AlgebraPtr& a2, int low_degree) {
  ProjMap d = ProjMap::zero(a2, {1}, {0});
  d.set(0, 0, a2->path_element(a2->path_index_by_name("a")));
  return Complex(a2, {{low_degree, {0}}, {low_degree + 1, {1}}}, {{low_degree, d}});
}

}  // namespace cotstruct::testing
