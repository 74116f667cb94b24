#pragma once

#include <optional>

#include "cotstruct/generators.hpp"
#include "cotstruct/hom_space.hpp"

namespace cotstruct {

/// A nonzero homotopy class witnessing a failed vanishing condition.
struct HomWitness {
  std::size_t generator_index;
  int shift;
  ChainMap representative;
};

struct MembershipVerdict {
  bool member;
  std::optional<HomWitness> witness;  // present exactly when member is false
};

/// X in B iff Hom(S, Sigma^n X) = 0 for every generator S and every n > 0
/// within the support window.
MembershipVerdict in_B(const Complex& x, const GeneratorSet& gens);

/// X in the vanishing class A-bar iff Hom(S, Sigma^i X) = 0 for i < 0.
MembershipVerdict in_A_bar(const Complex& x, const GeneratorSet& gens);

/// Sampled necessary condition for X in A = Sigma(perp B): checks
/// Hom(Sigma^{-1} X, B') = 0 against every sample. Samples must pass in_B.
bool in_A_sampled(const Complex& x, const GeneratorSet& gens, const std::vector<Complex>& samples);

}  // namespace cotstruct
