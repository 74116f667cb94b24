#include "cotstruct/complex.hpp"

#include <stdexcept>

namespace cotstruct {

Complex Complex::zero(AlgebraPtr algebra) { return Complex(std::move(algebra), {}, {}); }

Complex Complex::stalk(AlgebraPtr algebra, ProjSummands summands, int degree) {
  std::map<int, ProjSummands> terms;
  if (!summands.empty()) terms[degree] = std::move(summands);
  return Complex(std::move(algebra), std::move(terms), {});
}

Complex::Complex(AlgebraPtr algebra, std::map<int, ProjSummands> terms, std::map<int, ProjMap> diffs)
    : algebra_(std::move(algebra)), terms_(std::move(terms)), diffs_(std::move(diffs)) {
  if (!algebra_) throw std::invalid_argument("complex needs an algebra");
  for (auto it = terms_.begin(); it != terms_.end();) {
    for (int v : it->second)
      if (v < 0 || static_cast<std::size_t>(v) >= algebra_->quiver().vertex_count())
        throw std::invalid_argument("summand vertex out of range in degree " + std::to_string(it->first));
    it = it->second.empty() ? terms_.erase(it) : std::next(it);
  }
  for (auto it = diffs_.begin(); it != diffs_.end();) {
    int n = it->first;
    const ProjMap& d = it->second;
    if (!(*d.algebra() == *algebra_)) throw std::invalid_argument("differential over wrong algebra");
    if (d.src() != term(n) || d.dst() != term(n + 1))
      throw std::invalid_argument("differential shape mismatch in degree " + std::to_string(n));
    it = d.is_zero() ? diffs_.erase(it) : std::next(it);
  }
  for (const auto& [n, d] : diffs_) {
    auto up = diffs_.find(n + 1);
    if (up != diffs_.end() && !up->second.compose(d).is_zero())
      throw std::invalid_argument("d o d != 0 between degrees " + std::to_string(n) + " and " +
                                  std::to_string(n + 2));
  }
}

ProjSummands Complex::term(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? ProjSummands{} : it->second;
}

ProjMap Complex::diff(int n) const {
  auto it = diffs_.find(n);
  if (it != diffs_.end()) return it->second;
  return ProjMap::zero(algebra_, term(n + 1), term(n));
}

int Complex::lowest_degree() const {
  if (terms_.empty()) throw std::logic_error("zero complex has no degrees");
  return terms_.begin()->first;
}

int Complex::highest_degree() const {
  if (terms_.empty()) throw std::logic_error("zero complex has no degrees");
  return terms_.rbegin()->first;
}

int Complex::degree_span() const {
  return terms_.empty() ? 0 : highest_degree() - lowest_degree() + 1;
}

std::size_t Complex::total_path_dim() const {
  std::size_t d = 0;
  for (const auto& [n, s] : terms_) d += summand_path_dim(*algebra_, s);
  return d;
}

bool operator==(const Complex& a, const Complex& b) {
  if (!(*a.algebra_ == *b.algebra_)) return false;
  if (a.terms_ != b.terms_) return false;
  // differentials: compare block data in every shared degree
  for (const auto& [n, s] : a.terms_) {
    (void)s;
    if (!(a.diff(n) == b.diff(n))) return false;
  }
  return true;
}

Complex suspend(const Complex& x, int n) {
  if (n == 0) return x;
  std::map<int, ProjSummands> terms;
  for (const auto& [k, s] : x.terms()) terms[k - n] = s;
  std::map<int, ProjMap> diffs;
  bool flip = (n % 2) != 0;
  for (const auto& [k, s] : x.terms()) {
    ProjMap d = x.diff(k);
    if (d.is_zero()) continue;
    diffs.emplace(k - n, flip ? d.negate() : d);
  }
  return Complex(x.algebra(), std::move(terms), std::move(diffs));
}

std::map<int, std::size_t> cohomology_dims(const Complex& x) {
  std::map<int, std::size_t> out;
  if (x.empty()) return out;
  const PathAlgebra& A = *x.algebra();
  for (int n = x.lowest_degree(); n <= x.highest_degree(); ++n) {
    std::size_t dim_n = summand_path_dim(A, x.term(n));
    if (dim_n == 0) continue;
    std::size_t rank_out = x.term(n + 1).empty() ? 0 : rank(x.diff(n).to_field_matrix());
    std::size_t rank_in = x.term(n - 1).empty() ? 0 : rank(x.diff(n - 1).to_field_matrix());
    std::size_t h = dim_n - rank_out - rank_in;
    if (h) out[n] = h;
  }
  return out;
}

}  // namespace cotstruct
