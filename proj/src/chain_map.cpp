#include "cotstruct/chain_map.hpp"

#include <stdexcept>

namespace cotstruct {

ChainMap ChainMap::zero(Complex src, Complex tgt, int shift) {
  return ChainMap(std::move(src), std::move(tgt), shift, {});
}

ChainMap ChainMap::identity(const Complex& x) {
  std::map<int, ProjMap> comps;
  for (const auto& [n, s] : x.terms()) comps.emplace(n, ProjMap::identity(x.algebra(), s));
  return ChainMap(x, x, 0, std::move(comps));
}

ChainMap::ChainMap(Complex src, Complex tgt, int shift, std::map<int, ProjMap> components)
    : src_(std::move(src)), tgt_(std::move(tgt)), shift_(shift), comps_(std::move(components)) {
  if (!(*src_.algebra() == *tgt_.algebra())) throw std::invalid_argument("chain map across algebras");
  for (auto it = comps_.begin(); it != comps_.end();) {
    int k = it->first;
    const ProjMap& f = it->second;
    if (f.src() != src_.term(k) || f.dst() != tgt_.term(k + shift_))
      throw std::invalid_argument("chain map component shape mismatch in degree " + std::to_string(k));
    it = f.is_zero() ? comps_.erase(it) : std::next(it);
  }
  // twisted commuting: (-1)^shift d_Y f = f d_X, degree-wise
  bool flip = (shift_ % 2) != 0;
  if (!src_.empty() && !tgt_.empty()) {
    for (int k = src_.lowest_degree() - 1; k <= src_.highest_degree(); ++k) {
      ProjMap lhs = tgt_.diff(k + shift_).compose(component(k));
      if (flip) lhs = lhs.negate();
      ProjMap rhs = component(k + 1).compose(src_.diff(k));
      if (!(lhs - rhs).is_zero())
        throw std::invalid_argument("chain map does not commute with differentials at degree " +
                                    std::to_string(k));
    }
  }
}

ProjMap ChainMap::component(int k) const {
  auto it = comps_.find(k);
  if (it != comps_.end()) return it->second;
  return ProjMap::zero(src_.algebra(), tgt_.term(k + shift_), src_.term(k));
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
  if (src_ != o.src_ || tgt_ != o.tgt_ || shift_ != o.shift_)
    throw std::invalid_argument("chain map sum: mismatched maps");
  std::map<int, ProjMap> comps;
  for (const auto& [k, f] : comps_) comps.emplace(k, f + o.component(k));
  for (const auto& [k, f] : o.comps_)
    if (!comps.count(k)) comps.emplace(k, f);
  return ChainMap(src_, tgt_, shift_, std::move(comps));
}

ChainMap ChainMap::operator-(const ChainMap& o) const { return *this + o.negate(); }

ChainMap ChainMap::negate() const {
  std::map<int, ProjMap> comps;
  for (const auto& [k, f] : comps_) comps.emplace(k, f.negate());
  return ChainMap(src_, tgt_, shift_, std::move(comps));
}

ChainMap ChainMap::scale(const Scalar& c) const {
  std::map<int, ProjMap> comps;
  for (const auto& [k, f] : comps_) comps.emplace(k, f.scale(c));
  return ChainMap(src_, tgt_, shift_, std::move(comps));
}

bool operator==(const ChainMap& a, const ChainMap& b) {
  return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.shift_ == b.shift_ && a.comps_ == b.comps_;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (g.src() != f.tgt()) throw std::invalid_argument("compose: middle object mismatch");
  int s = f.shift();
  std::map<int, ProjMap> comps;
  for (const auto& [k, fk] : f.components()) {
    ProjMap gk = g.component(k + s);
    comps.emplace(k, gk.compose(fk));
  }
  return ChainMap(f.src(), g.tgt(), s + g.shift(), std::move(comps));
}

ChainMap suspend(const ChainMap& f, int m) {
  if (m == 0) return f;
  std::map<int, ProjMap> comps;
  for (const auto& [k, fk] : f.components()) comps.emplace(k - m, fk);
  return ChainMap(suspend(f.src(), m), suspend(f.tgt(), m), f.shift(), std::move(comps));
}

}  // namespace cotstruct
