#pragma once

#include "cotstruct/generators.hpp"
#include "cotstruct/membership.hpp"
#include "cotstruct/triangle.hpp"

namespace cotstruct {

/// One step of the approximation tower: the triangle R_n -> B_n -> B_{n+1}
/// -> Sigma R_n, where B_{n+1} is the mapping cone of f_n.
struct TowerStep {
  Complex b;        // B_n
  Complex r;        // R_n, a finite sum of negative suspensions of generators
  Complex b_next;   // B_{n+1}
  ChainMap f;       // R_n -> B_n
  ChainMap g;       // B_n -> B_{n+1}
  ChainMap h;       // B_{n+1} -> Sigma R_n
  /// Summand bookkeeping: (generator index, suspension i < 0, multiplicity).
  std::vector<std::tuple<std::size_t, int, std::size_t>> r_summands;
};

struct Tower {
  Complex input;  // B_0
  std::vector<TowerStep> steps;
  bool terminated = false;

  const Complex& last() const { return steps.empty() ? input : steps.back().b_next; }
};

/// Raised when the tower fails to stabilise within max_iter steps: the
/// homotopy colimit cannot be realised as a finite object in this model.
class NonTerminating : public std::runtime_error {
 public:
  explicit NonTerminating(Tower partial_tower)
      : std::runtime_error("tower did not terminate within the iteration bound"),
        partial(std::move(partial_tower)) {}
  Tower partial;
};

/// Right Add(R)-approximation: R_0 built from one copy of Sigma^i S per basis
/// class of Hom(Sigma^i S, X) over i < 0, f_0 assembled from the class
/// representatives. Surjectivity of every induced Hom(Sigma^i S, -) map is
/// verified by rank before returning.
struct RApproximation {
  Complex r;
  ChainMap f;  // r -> x
  std::vector<std::tuple<std::size_t, int, std::size_t>> summands;
};
RApproximation r_approximation(const Complex& x, const GeneratorSet& gens);

/// Empirical bound on the tower length: the generators can only reach
/// positive suspensions up to hi(X) - lo(S), and each step lowers the top
/// nonvanishing level, so that distance plus slack suffices.
std::size_t default_max_iter(const Complex& x, const GeneratorSet& gens);

/// Iterates B_{n+1} = cone(f_n) until R_n = 0, asserting the short-exact-
/// sequence dimension identity of every step. Throws NonTerminating when
/// max_iter steps elapse without stabilising.
Tower build_tower(const Complex& x, const GeneratorSet& gens, std::size_t max_iter);

struct BApproximation {
  Complex b;
  ChainMap g_x;  // x -> b, the composite of the tower maps
  Tower tower;
};
BApproximation b_approximation(const Complex& x, const GeneratorSet& gens, std::size_t max_iter);

}  // namespace cotstruct
