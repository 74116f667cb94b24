#include "cotstruct/minimal.hpp"

namespace cotstruct {

namespace {

struct Pivot {
  int degree;
  std::size_t row, col;
  Scalar coeff;  // trivial-path coefficient of the entry
};

// First invertible entry of the differential in scan order, if any.
std::optional<Pivot> find_pivot(const Complex& x) {
  if (x.empty()) return std::nullopt;
  const PathAlgebra& A = *x.algebra();
  for (int n = x.lowest_degree(); n < x.highest_degree(); ++n) {
    const ProjMap d = x.diff(n);
    for (std::size_t t = 0; t < d.dst().size(); ++t)
      for (std::size_t s = 0; s < d.src().size(); ++s) {
        if (d.src()[s] != d.dst()[t]) continue;
        Scalar c = d.at(t, s).coeff(A.trivial_path(d.src()[s]));
        if (!c.is_zero()) return Pivot{n, t, s, c};
      }
  }
  return std::nullopt;
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) idx.push_back(i);
  return idx;
}

}  // namespace

MinimalModel minimal_model(const Complex& x) {
  AlgebraPtr A = x.algebra();
  Complex cur = x;
  ChainMap include = ChainMap::identity(x);   // cur -> x
  ChainMap project = ChainMap::identity(x);   // x -> cur

  while (auto piv = find_pivot(cur)) {
    int n = piv->degree;
    const ProjMap d = cur.diff(n);
    std::size_t t = piv->row, s = piv->col;
    Scalar cinv = piv->coeff.inverse();

    std::vector<std::size_t> keep_rows = all_but(d.dst().size(), t);
    std::vector<std::size_t> keep_cols = all_but(d.src().size(), s);

    // d' = rho - theta phi^{-1} psi on the surviving blocks
    ProjMap reduced = d.submap(keep_rows, keep_cols);
    for (std::size_t ti = 0; ti < keep_rows.size(); ++ti) {
      AlgebraElement theta = d.at(keep_rows[ti], s);
      if (theta.is_zero()) continue;
      for (std::size_t si = 0; si < keep_cols.size(); ++si) {
        AlgebraElement psi = d.at(t, keep_cols[si]);
        if (psi.is_zero()) continue;
        reduced.set(ti, si, reduced.at(ti, si) - (theta * psi).scale(cinv));
      }
    }

    std::map<int, ProjSummands> terms = cur.terms();
    ProjSummands src_kept, dst_kept;
    for (std::size_t i : keep_cols) src_kept.push_back(d.src()[i]);
    for (std::size_t i : keep_rows) dst_kept.push_back(d.dst()[i]);
    if (src_kept.empty()) terms.erase(n); else terms[n] = src_kept;
    if (dst_kept.empty()) terms.erase(n + 1); else terms[n + 1] = dst_kept;

    std::map<int, ProjMap> diffs;
    for (int k = cur.lowest_degree(); k < cur.highest_degree(); ++k) {
      ProjMap dk = cur.diff(k);
      if (k == n) {
        dk = reduced;
      } else if (k == n - 1) {
        // drop the cancelled row of X^n
        std::vector<std::size_t> rows = all_but(dk.dst().size(), s);
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < dk.src().size(); ++i) cols.push_back(i);
        dk = dk.submap(rows, cols);
      } else if (k == n + 1) {
        // drop the cancelled column of X^{n+1}
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < dk.dst().size(); ++i) rows.push_back(i);
        dk = dk.submap(rows, all_but(dk.src().size(), t));
      }
      if (!dk.src().empty() && !dk.dst().empty() && !dk.is_zero()) diffs.emplace(k, dk);
    }

    Complex next(A, terms, std::move(diffs));

    // projection cur -> next: identity away from the pivot degrees
    std::map<int, ProjMap> p_comps;
    for (const auto& [k, summands] : cur.terms()) {
      if (next.term(k).empty()) continue;
      if (k == n) {
        ProjMap p = ProjMap::zero(A, src_kept, summands);
        for (std::size_t i = 0; i < keep_cols.size(); ++i) p.set(i, keep_cols[i], A->idempotent(src_kept[i]));
        p_comps.emplace(k, std::move(p));
      } else if (k == n + 1) {
        ProjMap p = ProjMap::zero(A, dst_kept, summands);
        for (std::size_t i = 0; i < keep_rows.size(); ++i) {
          p.set(i, keep_rows[i], A->idempotent(dst_kept[i]));
          AlgebraElement theta = d.at(keep_rows[i], s);
          if (!theta.is_zero()) p.set(i, t, -theta.scale(cinv));
        }
        p_comps.emplace(k, std::move(p));
      } else {
        p_comps.emplace(k, ProjMap::identity(A, summands));
      }
    }
    ChainMap step_proj(cur, next, 0, std::move(p_comps));

    // inclusion next -> cur
    std::map<int, ProjMap> i_comps;
    for (const auto& [k, summands] : next.terms()) {
      if (k == n) {
        ProjMap g = ProjMap::zero(A, cur.term(k), summands);
        for (std::size_t i = 0; i < keep_cols.size(); ++i) {
          g.set(keep_cols[i], i, A->idempotent(src_kept[i]));
          AlgebraElement psi = d.at(t, keep_cols[i]);
          if (!psi.is_zero()) g.set(s, i, -psi.scale(cinv));
        }
        i_comps.emplace(k, std::move(g));
      } else if (k == n + 1) {
        ProjMap g = ProjMap::zero(A, cur.term(k), summands);
        for (std::size_t i = 0; i < keep_rows.size(); ++i) g.set(keep_rows[i], i, A->idempotent(dst_kept[i]));
        i_comps.emplace(k, std::move(g));
      } else {
        i_comps.emplace(k, ProjMap::identity(A, summands));
      }
    }
    ChainMap step_inc(next, cur, 0, std::move(i_comps));

    project = compose(step_proj, project);
    include = compose(include, step_inc);
    cur = next;
  }

  return MinimalModel{cur, include, project};
}

}  // namespace cotstruct
