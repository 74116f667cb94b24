#include "cotstruct/generators.hpp"

#include <stdexcept>

namespace cotstruct {

GeneratorSet::GeneratorSet(std::vector<Complex> generators, bool generating_flag)
    : gens_(std::move(generators)), generating_(generating_flag) {
  if (gens_.empty()) throw std::invalid_argument("generator set is empty");
  for (const auto& g : gens_) {
    if (g.empty()) throw std::invalid_argument("zero complex cannot generate");
    if (!(*g.algebra() == *gens_.front().algebra()))
      throw std::invalid_argument("generators over different algebras");
  }
  for (const auto& g : gens_) mins_.push_back(minimal_model(g).model);
}

int GeneratorSet::lowest_degree() const {
  int lo = gens_.front().lowest_degree();
  for (const auto& g : gens_) lo = std::min(lo, g.lowest_degree());
  return lo;
}

int GeneratorSet::highest_degree() const {
  int hi = gens_.front().highest_degree();
  for (const auto& g : gens_) hi = std::max(hi, g.highest_degree());
  return hi;
}

int GeneratorSet::max_span() const {
  int span = 0;
  for (const auto& g : gens_) span = std::max(span, g.degree_span());
  return span;
}

}  // namespace cotstruct
