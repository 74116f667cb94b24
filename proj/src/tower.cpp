#include "cotstruct/tower.hpp"

#include <stdexcept>

#include "cotstruct/verify.hpp"

namespace cotstruct {

RApproximation r_approximation(const Complex& x, const GeneratorSet& gens) {
  AlgebraPtr A = gens.algebra();
  if (!(*x.algebra() == *A)) throw std::invalid_argument("object over a different algebra");

  std::vector<Complex> pieces;
  std::vector<ChainMap> piece_maps;  // one representative per class, piece -> x
  std::vector<std::tuple<std::size_t, int, std::size_t>> summands;

  if (!x.empty()) {
    Complex xm = minimal_model(x).model;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const Complex& s = gens.generators()[gi];
      // Hom(Sigma^i S, X) can be nonzero only for i >= lo(S) - hi(X)
      int i_min = s.lowest_degree() - x.highest_degree();
      for (int i = -1; i >= i_min; --i) {
        if (xm.empty() || hom_dimension(gens.minimized()[gi], xm, -i) == 0) continue;
        Complex shifted = suspend(s, i);
        HomSpace hs = HomSpace::compute(shifted, x, 0);
        if (hs.dimension() == 0) continue;
        summands.emplace_back(gi, i, hs.dimension());
        for (const ChainMap& rep : hs.representatives()) {
          pieces.push_back(shifted);
          piece_maps.push_back(rep);
        }
      }
    }
  }

  DirectSum ds = direct_sum(A, pieces);
  std::map<int, ProjMap> comps;
  if (!ds.sum.empty() && !x.empty()) {
    for (const auto& [k, src] : ds.sum.terms()) {
      ProjSummands dst = x.term(k);
      if (dst.empty()) continue;
      ProjMap row = ProjMap::zero(A, dst, {});
      for (std::size_t pi = 0; pi < pieces.size(); ++pi) row = row.hconcat(piece_maps[pi].component(k));
      if (!row.is_zero()) comps.emplace(k, std::move(row));
    }
  }
  ChainMap f(ds.sum, x, 0, std::move(comps));

  // approximation property, verified by rank per (generator, suspension)
  for (const auto& [gi, i, mult] : summands) {
    (void)mult;
    Complex shifted = suspend(gens.generators()[gi], i);
    HomSpace to_x = HomSpace::compute(shifted, x, 0);
    HomSpace to_r = HomSpace::compute(shifted, ds.sum, 0);
    Matrix induced(A->field(), to_x.dimension(), to_r.dimension());
    for (std::size_t c = 0; c < to_r.representatives().size(); ++c) {
      std::vector<Scalar> coords = to_x.class_coordinates(compose(f, to_r.representatives()[c]));
      for (std::size_t r = 0; r < coords.size(); ++r) induced.set(r, c, coords[r]);
    }
    if (rank(induced) != to_x.dimension())
      throw std::logic_error("right approximation failed its surjectivity check");
  }

  return RApproximation{ds.sum, std::move(f), std::move(summands)};
}

std::size_t default_max_iter(const Complex& x, const GeneratorSet& gens) {
  if (x.empty()) return 1;
  int reach = x.highest_degree() - gens.lowest_degree();
  return static_cast<std::size_t>(std::max(reach, 0) + 2);
}

Tower build_tower(const Complex& x, const GeneratorSet& gens, std::size_t max_iter) {
  if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  Tower tower{x, {}, false};
  Complex current = x;
  for (std::size_t n = 0; n <= max_iter; ++n) {
    RApproximation approx = r_approximation(current, gens);
    if (approx.r.empty()) {
      tower.terminated = true;
      return tower;
    }
    if (n == max_iter) break;
    Triangle tri = cone(approx.f);
    TowerStep step{current, approx.r, tri.w_obj, approx.f, tri.v, tri.w, approx.summands};
    tower.steps.push_back(std::move(step));
    current = tower.steps.back().b_next;

    SesReport ses = verify_ses(tower, tower.steps.size() - 1, gens);
    if (!ses.pass) throw std::logic_error("tower step violates the short-exact-sequence identity");
  }
  throw NonTerminating(std::move(tower));
}

BApproximation b_approximation(const Complex& x, const GeneratorSet& gens, std::size_t max_iter) {
  Tower tower = build_tower(x, gens, max_iter);
  ChainMap g_x = ChainMap::identity(x);
  for (const auto& step : tower.steps) g_x = compose(step.g, g_x);
  return BApproximation{tower.last(), std::move(g_x), std::move(tower)};
}

}  // namespace cotstruct
