#pragma once

#include "cotstruct/tower.hpp"

namespace cotstruct {

/// The decomposition triangle A -> X -> B with A = Sigma^{-1} cone(g_X):
/// the backward rotation of the literal mapping-cone triangle of g_X.
struct Decomposition {
  Complex input;
  Complex a_part;
  Complex b_part;
  Triangle triangle;  // (A, X, B)
  ChainMap g_x;       // X -> B
  Tower tower;
  /// Verdict for a_part, computed when the generator set is flagged generating.
  std::optional<MembershipVerdict> a_membership;
};

/// Builds the decomposition of X. Asserts in_B(b_part); when the generator
/// set is flagged generating, additionally requires in_A_bar(a_part).
/// Propagates NonTerminating from the tower.
Decomposition decompose(const Complex& x, const GeneratorSet& gens, std::size_t max_iter);

}  // namespace cotstruct
