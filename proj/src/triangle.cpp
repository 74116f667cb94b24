#include "cotstruct/triangle.hpp"

#include <stdexcept>

namespace cotstruct {

Triangle cone(const ChainMap& f) {
  if (f.shift() != 0) throw std::invalid_argument("cone expects a shift-0 map");
  const Complex& U = f.src();
  const Complex& V = f.tgt();
  AlgebraPtr A = U.algebra();

  std::map<int, ProjSummands> terms;
  std::map<int, ProjMap> diffs;
  auto w_term = [&](int n) {
    ProjSummands s = V.term(n);
    ProjSummands up = U.term(n + 1);
    s.insert(s.end(), up.begin(), up.end());
    return s;
  };

  int lo = 0, hi = -1;
  if (!U.empty() || !V.empty()) {
    lo = !V.empty() ? V.lowest_degree() : U.lowest_degree() - 1;
    hi = !V.empty() ? V.highest_degree() : U.highest_degree() - 1;
    if (!U.empty()) {
      lo = std::min(lo, U.lowest_degree() - 1);
      hi = std::max(hi, U.highest_degree() - 1);
    }
  }
  for (int n = lo; n <= hi; ++n) {
    ProjSummands s = w_term(n);
    if (!s.empty()) terms[n] = s;
  }
  for (int n = lo; n <= hi; ++n) {
    ProjSummands src = w_term(n), dst = w_term(n + 1);
    if (src.empty() || dst.empty()) continue;
    // [[d_V, f], [0, -d_U]]
    ProjMap top = V.diff(n).hconcat(f.component(n + 1));
    ProjMap bottom = ProjMap::zero(A, U.term(n + 2), V.term(n)).hconcat(U.diff(n + 1).negate());
    ProjMap d = top.vconcat(bottom);
    if (!d.is_zero()) diffs.emplace(n, std::move(d));
  }
  Complex W(A, std::move(terms), std::move(diffs));

  // v : V -> W, block inclusion
  std::map<int, ProjMap> v_comps;
  for (const auto& [n, s] : V.terms()) {
    ProjMap inc = ProjMap::identity(A, s).vconcat(ProjMap::zero(A, U.term(n + 1), s));
    v_comps.emplace(n, std::move(inc));
  }
  ChainMap v(V, W, 0, std::move(v_comps));

  // w : W -> Sigma U, block projection (shift 1)
  std::map<int, ProjMap> w_comps;
  for (const auto& [n, s] : W.terms()) {
    ProjSummands up = U.term(n + 1);
    if (up.empty()) continue;
    ProjMap proj = ProjMap::zero(A, up, V.term(n)).hconcat(ProjMap::identity(A, up));
    w_comps.emplace(n, std::move(proj));
  }
  ChainMap w(W, U, 1, std::move(w_comps));

  return Triangle{U, V, W, f, std::move(v), std::move(w)};
}

DirectSum direct_sum(AlgebraPtr algebra, const std::vector<Complex>& parts) {
  for (const auto& p : parts)
    if (!(*p.algebra() == *algebra)) throw std::invalid_argument("direct_sum: mixed algebras");

  std::map<int, ProjSummands> terms;
  for (const auto& p : parts)
    for (const auto& [n, s] : p.terms()) {
      ProjSummands& acc = terms[n];
      acc.insert(acc.end(), s.begin(), s.end());
    }
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.empty() ? terms.erase(it) : std::next(it);

  auto offset_in = [&](int n, std::size_t part) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < part; ++i) off += parts[i].term(n).size();
    return off;
  };

  std::map<int, ProjMap> diffs;
  for (const auto& [n, dst_all] : terms) {
    auto src_it = terms.find(n);
    auto dst_it = terms.find(n + 1);
    if (dst_it == terms.end()) continue;
    ProjMap d = ProjMap::zero(algebra, dst_it->second, src_it->second);
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
      ProjMap dp = parts[pi].diff(n);
      std::size_t r0 = offset_in(n + 1, pi), c0 = offset_in(n, pi);
      for (std::size_t t = 0; t < dp.dst().size(); ++t)
        for (std::size_t s = 0; s < dp.src().size(); ++s) d.set(r0 + t, c0 + s, dp.at(t, s));
    }
    if (!d.is_zero()) diffs.emplace(n, std::move(d));
  }
  Complex sum(algebra, terms, std::move(diffs));

  DirectSum out{sum, {}, {}};
  for (std::size_t pi = 0; pi < parts.size(); ++pi) {
    std::map<int, ProjMap> inj, proj;
    for (const auto& [n, s] : parts[pi].terms()) {
      ProjSummands all = sum.term(n);
      ProjMap in = ProjMap::zero(algebra, all, s);
      ProjMap pr = ProjMap::zero(algebra, s, all);
      std::size_t off = offset_in(n, pi);
      for (std::size_t i = 0; i < s.size(); ++i) {
        AlgebraElement e = algebra->idempotent(s[i]);
        in.set(off + i, i, e);
        pr.set(i, off + i, e);
      }
      inj.emplace(n, std::move(in));
      proj.emplace(n, std::move(pr));
    }
    out.injections.emplace_back(parts[pi], sum, 0, std::move(inj));
    out.projections.emplace_back(sum, parts[pi], 0, std::move(proj));
  }
  return out;
}

}  // namespace cotstruct
