#include "cotstruct/membership.hpp"

#include <functional>
#include <stdexcept>

namespace cotstruct {

namespace {

// Scans the support window of Hom(S, Sigma^n X) over generators for a nonzero
// class with `accept(n)`; fills the witness from the unreduced objects.
std::optional<HomWitness> find_nonzero(const Complex& x, const GeneratorSet& gens,
                                       const std::function<bool(int)>& accept) {
  Complex xm = minimal_model(x).model;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Complex& sm = gens.minimized()[gi];
    auto window = hom_shift_window(sm, xm);
    if (!window) continue;
    for (int n = window->first; n <= window->second; ++n) {
      if (!accept(n)) continue;
      if (hom_dimension(sm, xm, n) == 0) continue;
      HomSpace hs = HomSpace::compute(gens.generators()[gi], x, n);
      if (hs.dimension() == 0) throw std::logic_error("witness extraction disagrees with dimension");
      return HomWitness{gi, n, hs.representatives().front()};
    }
  }
  return std::nullopt;
}

}  // namespace

MembershipVerdict in_B(const Complex& x, const GeneratorSet& gens) {
  auto w = find_nonzero(x, gens, [](int n) { return n > 0; });
  if (w) return MembershipVerdict{false, std::move(w)};
  return MembershipVerdict{true, std::nullopt};
}

MembershipVerdict in_A_bar(const Complex& x, const GeneratorSet& gens) {
  auto w = find_nonzero(x, gens, [](int n) { return n < 0; });
  if (w) return MembershipVerdict{false, std::move(w)};
  return MembershipVerdict{true, std::nullopt};
}

bool in_A_sampled(const Complex& x, const GeneratorSet& gens, const std::vector<Complex>& samples) {
  for (const auto& b : samples)
    if (!in_B(b, gens).member) throw std::invalid_argument("sample not in B");
  Complex shifted = minimal_model(suspend(x, -1)).model;
  for (const auto& b : samples)
    if (hom_dimension(shifted, b, 0) != 0) return false;
  return true;
}

}  // namespace cotstruct
