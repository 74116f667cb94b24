#include "cotstruct/decompose.hpp"

#include <stdexcept>

namespace cotstruct {

Decomposition decompose(const Complex& x, const GeneratorSet& gens, std::size_t max_iter) {
  AlgebraPtr A = gens.algebra();
  BApproximation ba = b_approximation(x, gens, max_iter);
  const Complex& b_part = ba.b;

  Complex a_part = Complex::zero(A);
  std::optional<Triangle> triangle;
  if (ba.tower.steps.empty()) {
    // X already lies in B: triangle 0 -> X -> X with the zero complex as A
    triangle = Triangle{a_part, x, x, ChainMap::zero(a_part, x, 0), ChainMap::identity(x),
                        ChainMap::zero(x, a_part, 1)};
  } else {
    Triangle cone_tri = cone(ba.g_x);  // (X, B, C)
    a_part = suspend(cone_tri.w_obj, -1);

    // u : A -> X, degree-wise -w^{k-1} of the cone triangle
    std::map<int, ProjMap> u_comps;
    for (const auto& [k, wk] : cone_tri.w.components()) u_comps.emplace(k + 1, wk.negate());
    ChainMap u(a_part, x, 0, std::move(u_comps));

    // w' : B -> Sigma A reuses the cone inclusion, since Sigma A = C on the nose
    std::map<int, ProjMap> w_comps;
    for (const auto& [k, vk] : cone_tri.v.components()) w_comps.emplace(k, vk);
    ChainMap w_prime(b_part, a_part, 1, std::move(w_comps));

    triangle = Triangle{a_part, x, b_part, std::move(u), ba.g_x, std::move(w_prime)};
  }

  MembershipVerdict b_verdict = in_B(b_part, gens);
  if (!b_verdict.member) throw std::logic_error("decomposition produced a b-part outside B");

  std::optional<MembershipVerdict> a_membership;
  if (gens.generating_flag()) {
    a_membership = in_A_bar(a_part, gens);
    if (!a_membership->member)
      throw std::runtime_error(
          "a-part fails the A-side vanishing test; the generator set is likely "
          "not generating or violates the corigidity conditions");
  }
  return Decomposition{x,           std::move(a_part),   b_part, std::move(*triangle),
                       ba.g_x,      std::move(ba.tower), std::move(a_membership)};
}

}  // namespace cotstruct
