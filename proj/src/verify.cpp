#include "cotstruct/verify.hpp"

#include <stdexcept>

namespace cotstruct {

namespace {

struct ShiftWindow {
  int lo = 0, hi = -1;
  bool empty() const { return lo > hi; }
  bool contains(int n) const { return n >= lo && n <= hi; }
};

ShiftWindow window_of(const Complex& from, const Complex& to) {
  auto w = hom_shift_window(from, to);
  if (!w) return ShiftWindow{};
  return ShiftWindow{w->first, w->second};
}

// Matrix of phi |-> phi o g from Hom(Q, T) to Hom(P, T), for g : P -> Q.
Matrix induced_precompose(const HomSpace& hom_pt, const HomSpace& hom_qt, const ChainMap& g) {
  Matrix m(g.src().algebra()->field(), hom_pt.dimension(), hom_qt.dimension());
  for (std::size_t c = 0; c < hom_qt.representatives().size(); ++c) {
    std::vector<Scalar> coords = hom_pt.class_coordinates(compose(hom_qt.representatives()[c], g));
    for (std::size_t r = 0; r < coords.size(); ++r) m.set(r, c, coords[r]);
  }
  return m;
}

// Matrix of psi |-> g o psi from Hom(T, P) to Hom(T, Q), for g : P -> Q.
Matrix induced_postcompose(const HomSpace& hom_tp, const HomSpace& hom_tq, const ChainMap& g) {
  Matrix m(g.src().algebra()->field(), hom_tq.dimension(), hom_tp.dimension());
  for (std::size_t c = 0; c < hom_tp.representatives().size(); ++c) {
    std::vector<Scalar> coords = hom_tq.class_coordinates(compose(g, hom_tp.representatives()[c]));
    for (std::size_t r = 0; r < coords.size(); ++r) m.set(r, c, coords[r]);
  }
  return m;
}

// Transports a shift-0 map to the minimal models of its endpoints.
ChainMap reduce_map(const ChainMap& g, const MinimalModel& src, const MinimalModel& tgt) {
  return compose(tgt.project, compose(g, src.include));
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "inconclusive";
  }
}

SesReport verify_ses(const Tower& tower, std::size_t step, const GeneratorSet& gens) {
  if (step >= tower.steps.size()) throw std::invalid_argument("tower step out of range");
  const TowerStep& st = tower.steps[step];
  SesReport report;
  report.step = step;

  Complex r_min = minimal_model(st.r).model;
  Complex cur_min = minimal_model(st.b).model;
  Complex next_min = minimal_model(st.b_next).model;

  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Complex& s_min = gens.minimized()[gi];
    if (s_min.empty()) continue;
    ShiftWindow wr = window_of(s_min, r_min);
    ShiftWindow wc = window_of(s_min, cur_min);
    ShiftWindow wn = window_of(s_min, next_min);
    // rows indexed by t = m - i >= 1; slot occupied when t+1 meets the R_n or
    // B_n window or t meets the B_{n+1} window
    int t_max = -1;
    if (!wr.empty()) t_max = std::max(t_max, wr.hi - 1);
    if (!wc.empty()) t_max = std::max(t_max, wc.hi - 1);
    if (!wn.empty()) t_max = std::max(t_max, wn.hi);
    for (int i = -1; i >= -t_max; --i)
      for (int m = 0; m + 1 - i <= t_max + 1; ++m) {
        int t = m - i;
        bool live = (!wr.empty() && wr.contains(t + 1)) || (!wc.empty() && wc.contains(t + 1)) ||
                    (!wn.empty() && wn.contains(t));
        if (!live) continue;
        // dim Hom(Sigma^i S, Sigma^j Y) = dim Hom(S, Sigma^{j-i} Y)
        std::size_t lhs = hom_dimension(s_min, r_min, t + 1);
        std::size_t rhs_next = hom_dimension(s_min, next_min, t);
        std::size_t rhs_cur = hom_dimension(s_min, cur_min, t + 1);
        bool ok = lhs == rhs_next + rhs_cur;
        if (!ok) report.pass = false;
        report.rows.push_back(SesRow{gi, i, m, lhs, rhs_next, rhs_cur, ok});
      }
  }
  return report;
}

ApproxMapsReport verify_approx_maps(const Tower& tower, std::size_t step, const GeneratorSet& gens,
                                    const std::vector<Complex>& samples) {
  if (step >= tower.steps.size()) throw std::invalid_argument("tower step out of range");
  for (const auto& b : samples)
    if (!in_B(b, gens).member) throw std::invalid_argument("sample not in B");

  const TowerStep& st = tower.steps[step];
  ApproxMapsReport report;
  report.step = step;

  MinimalModel cur = minimal_model(st.b);
  MinimalModel next = minimal_model(st.b_next);
  ChainMap g_red = reduce_map(st.g, cur, next);

  for (std::size_t bi = 0; bi < samples.size(); ++bi) {
    Complex b_min = minimal_model(samples[bi]).model;
    if (b_min.empty()) continue;  // trivially bijective everywhere
    int m_max = -1;
    if (!cur.model.empty()) m_max = std::max(m_max, b_min.highest_degree() - cur.model.lowest_degree());
    if (!next.model.empty()) m_max = std::max(m_max, b_min.highest_degree() - next.model.lowest_degree());
    for (int m = 0; m <= m_max; ++m) {
      HomSpace hom_next = HomSpace::compute(suspend(next.model, -m), b_min, 0);
      HomSpace hom_cur = HomSpace::compute(suspend(cur.model, -m), b_min, 0);
      if (hom_next.dimension() == 0 && hom_cur.dimension() == 0) continue;
      Matrix induced = induced_precompose(hom_cur, hom_next, suspend(g_red, -m));
      std::size_t rk = rank(induced);
      bool ok = m == 0 ? rk == hom_cur.dimension()
                       : rk == hom_cur.dimension() && hom_cur.dimension() == hom_next.dimension();
      if (!ok) report.pass = false;
      report.rows.push_back(ApproxRow{bi, m, hom_next.dimension(), hom_cur.dimension(), rk, ok});
    }
  }
  return report;
}

IsomReport verify_isom(const Decomposition& dec, const GeneratorSet& gens, const std::vector<Complex>& samples) {
  for (const auto& b : samples)
    if (!in_B(b, gens).member) throw std::invalid_argument("sample not in B");

  IsomReport report;
  MinimalModel x = minimal_model(dec.input);
  MinimalModel b = minimal_model(dec.b_part);
  ChainMap g_red = reduce_map(dec.g_x, x, b);

  for (std::size_t bi = 0; bi < samples.size(); ++bi) {
    Complex s_min = minimal_model(samples[bi]).model;
    if (s_min.empty()) continue;
    int i_min = 0;
    if (!x.model.empty()) i_min = std::min(i_min, x.model.lowest_degree() - s_min.highest_degree());
    if (!b.model.empty()) i_min = std::min(i_min, b.model.lowest_degree() - s_min.highest_degree());
    for (int i = -1; i >= i_min; --i) {
      HomSpace hom_b = HomSpace::compute(suspend(b.model, i), s_min, 0);
      HomSpace hom_x = HomSpace::compute(suspend(x.model, i), s_min, 0);
      if (hom_b.dimension() == 0 && hom_x.dimension() == 0) continue;
      Matrix induced = induced_precompose(hom_x, hom_b, suspend(g_red, i));
      std::size_t rk = rank(induced);
      bool ok = rk == hom_x.dimension() && hom_x.dimension() == hom_b.dimension();
      if (!ok) report.pass = false;
      report.rows.push_back(IsomRow{bi, i, hom_b.dimension(), hom_x.dimension(), rk, ok});
    }
  }
  return report;
}

SetupReport check_setup2(const GeneratorSet& gens) {
  SetupReport report;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b) {
      const Complex& sa_min = gens.minimized()[a];
      const Complex& sb_min = gens.minimized()[b];
      // (1) Hom(Sigma^i S_a, S_b) = dim Hom(S_a, Sigma^{-i} S_b) for i > 0
      ShiftWindow w = window_of(sa_min, sb_min);
      for (int i = 1; !w.empty() && i <= -w.lo; ++i) {
        std::size_t d = hom_dimension(sa_min, sb_min, -i);
        if (d == 0) continue;
        report.cond1_pass = false;
        HomSpace hs = HomSpace::compute(suspend(gens.generators()[a], i), gens.generators()[b], 0);
        report.cond1_failures.push_back(PairWitness{a, b, i, d, hs.representatives().front()});
      }
      // (2) Hom(S_a, Sigma S_b) = 0
      std::size_t d2 = hom_dimension(sa_min, sb_min, 1);
      if (d2 != 0) {
        report.cond2_pass = false;
        HomSpace hs = HomSpace::compute(gens.generators()[a], gens.generators()[b], 1);
        report.cond2_failures.push_back(PairWitness{a, b, 1, d2, hs.representatives().front()});
      }
    }
  return report;
}

CorigidReport check_connected_corigid(const Complex& s) {
  CorigidReport report;
  if (s.empty()) return report;  // vacuous
  Complex s_min = minimal_model(s).model;
  if (s_min.empty()) return report;
  ShiftWindow w = window_of(s_min, s_min);
  for (int i = 1; i <= -w.lo; ++i) {
    std::size_t d = hom_dimension(s_min, s_min, -i);
    if (d == 0) continue;
    report.corigid_pass = false;
    HomSpace hs = HomSpace::compute(suspend(s, i), s, 0);
    report.failures.push_back(PairWitness{0, 0, i, d, hs.representatives().front()});
  }
  std::size_t d2 = hom_dimension(s_min, s_min, 1);
  if (d2 != 0) {
    report.no_self_ext_pass = false;
    HomSpace hs = HomSpace::compute(s, s, 1);
    report.failures.push_back(PairWitness{0, 0, 1, d2, hs.representatives().front()});
  }
  return report;
}

AxiomReport verify_axioms(const GeneratorSet& gens, const std::vector<Complex>& test_objects,
                          std::size_t max_iter) {
  AxiomReport report;
  AlgebraPtr A = gens.algebra();

  std::vector<std::optional<Decomposition>> decs(test_objects.size());
  for (std::size_t oi = 0; oi < test_objects.size(); ++oi) {
    try {
      decs[oi] =
          decompose(test_objects[oi], gens, max_iter ? max_iter : default_max_iter(test_objects[oi], gens));
    } catch (const NonTerminating&) {
      report.nonterminating_objects.push_back(oi);
      report.decompositions = Verdict::Inconclusive;
    }
  }

  // (1) shift closure
  std::vector<bool> in_b(test_objects.size()), in_a(test_objects.size());
  for (std::size_t oi = 0; oi < test_objects.size(); ++oi) {
    in_b[oi] = in_B(test_objects[oi], gens).member;
    in_a[oi] = in_A_bar(test_objects[oi], gens).member;
    if (in_b[oi] && !in_B(suspend(test_objects[oi], 1), gens).member) {
      report.shift_closure = Verdict::Fail;
      report.failures.push_back(AxiomFailure{"in_B not closed under suspension", oi});
    }
    if (in_a[oi] && !in_A_bar(suspend(test_objects[oi], -1), gens).member) {
      report.shift_closure = Verdict::Fail;
      report.failures.push_back(AxiomFailure{"in_A_bar not closed under desuspension", oi});
    }
  }

  // (2) orthogonality across all decomposition outputs
  std::vector<Complex> a_shifted, b_min;
  for (const auto& d : decs) {
    if (!d) continue;
    a_shifted.push_back(minimal_model(suspend(d->a_part, -1)).model);
    b_min.push_back(minimal_model(d->b_part).model);
  }
  for (std::size_t i = 0; i < a_shifted.size(); ++i)
    for (std::size_t j = 0; j < b_min.size(); ++j) {
      ++report.orthogonality_pairs;
      if (hom_dimension(a_shifted[i], b_min[j], 0) != 0) {
        report.orthogonality = Verdict::Fail;
        report.failures.push_back(AxiomFailure{"Hom(Sigma^{-1}A, B) != 0 for pair (" + std::to_string(i) +
                                                   "," + std::to_string(j) + ")",
                                               std::nullopt});
      }
    }

  // (0) summand-closure spot check and finite-type closure on consecutive pairs
  for (std::size_t oi = 0; oi + 1 < test_objects.size(); ++oi) {
    Complex sum = direct_sum(A, {test_objects[oi], test_objects[oi + 1]}).sum;
    bool sum_b = in_B(sum, gens).member;
    bool sum_a = in_A_bar(sum, gens).member;
    if (sum_b && !(in_b[oi] && in_b[oi + 1])) {
      report.summand_closure = Verdict::Fail;
      report.failures.push_back(AxiomFailure{"B not closed under summands", oi});
    }
    if (sum_a && !(in_a[oi] && in_a[oi + 1])) {
      report.summand_closure = Verdict::Fail;
      report.failures.push_back(AxiomFailure{"A-bar not closed under summands", oi});
    }
    if (in_b[oi] && in_b[oi + 1] && !sum_b) {
      report.finite_type = Verdict::Fail;
      report.failures.push_back(AxiomFailure{"B not closed under finite coproducts", oi});
    }
  }

  return report;
}

MembershipEqualityReport membership_equality_suite(const GeneratorSet& gens,
                                                   const std::vector<Complex>& test_objects,
                                                   const std::vector<Complex>& samples,
                                                   std::size_t max_iter) {
  if (!gens.generating_flag())
    throw std::invalid_argument("membership equality requires the generating flag");
  MembershipEqualityReport report;
  for (std::size_t oi = 0; oi < test_objects.size(); ++oi) {
    const Complex& x = test_objects[oi];
    Decomposition dec = decompose(x, gens, max_iter ? max_iter : default_max_iter(x, gens));
    Complex shifted = suspend(x, -1);
    BApproximation shifted_approx =
        b_approximation(shifted, gens, max_iter ? max_iter : default_max_iter(shifted, gens));
    MembershipEqualityRow row;
    row.object = oi;
    row.a_bar = in_A_bar(x, gens).member;
    row.shifted_b_contractible = is_contractible(shifted_approx.b);
    row.forward_ok = !is_contractible(dec.b_part) || row.a_bar;
    row.sampled_ok = !row.a_bar || in_A_sampled(x, gens, samples);
    row.a_part_ok = in_A_bar(dec.a_part, gens).member;
    if (!row.ok()) report.pass = false;
    report.rows.push_back(row);
  }
  return report;
}

GeneratingReport generating_diagnostic(const GeneratorSet& gens, const std::vector<Complex>& probes) {
  GeneratingReport report;
  for (std::size_t pi = 0; pi < probes.size(); ++pi) {
    Complex x_min = minimal_model(probes[pi]).model;
    bool all_vanish = true;
    for (std::size_t gi = 0; gi < gens.size() && all_vanish; ++gi) {
      const Complex& s_min = gens.minimized()[gi];
      ShiftWindow w = window_of(s_min, x_min);
      for (int i = w.lo; i <= w.hi && all_vanish; ++i)
        if (hom_dimension(s_min, x_min, i) != 0) all_vanish = false;
    }
    bool contractible = x_min.empty();
    bool ok = !all_vanish || contractible;
    if (!ok) report.pass = false;
    report.rows.push_back(GeneratingRow{pi, all_vanish, contractible, ok});
  }
  return report;
}

Setup2IsoReport setup2_iso_diagnostic(const Decomposition& dec, const GeneratorSet& gens) {
  SetupReport setup = check_setup2(gens);
  if (!setup.cond1_pass || !setup.cond2_pass)
    throw std::invalid_argument("setup-2 conditions fail for this generator set");

  Setup2IsoReport report;
  MinimalModel x = minimal_model(dec.input);
  MinimalModel b = minimal_model(dec.b_part);
  ChainMap g_red = reduce_map(dec.g_x, x, b);

  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Complex& s_min = gens.minimized()[gi];
    if (s_min.empty()) continue;
    ShiftWindow wx = window_of(s_min, x.model);
    ShiftWindow wb = window_of(s_min, b.model);
    int i_lo = 0;
    if (!wx.empty()) i_lo = std::min(i_lo, wx.lo);
    if (!wb.empty()) i_lo = std::min(i_lo, wb.lo);
    for (int i = i_lo; i < 1; ++i) {
      HomSpace hom_x = HomSpace::compute(s_min, x.model, i);
      HomSpace hom_b = HomSpace::compute(s_min, b.model, i);
      if (hom_x.dimension() == 0 && hom_b.dimension() == 0) continue;
      Matrix induced = induced_postcompose(hom_x, hom_b, g_red);
      std::size_t rk = rank(induced);
      bool bij = rk == hom_x.dimension() && hom_x.dimension() == hom_b.dimension();
      if (!bij) report.all_bijective = false;
      report.rows.push_back(Setup2IsoRow{gi, i, hom_x.dimension(), hom_b.dimension(), rk, bij});
    }
  }
  return report;
}

NondegeneracyReport nondegeneracy_window(const GeneratorSet& gens, const Complex& x, int window) {
  if (is_contractible(x)) throw std::invalid_argument("nondegeneracy probe must be non-contractible");
  NondegeneracyReport report;
  if (window > 0) {
    report.window = window;
  } else {
    // wide enough to move every potentially nonzero Hom(S, Sigma^j -) slot
    // past either side of zero, wherever the supports sit
    int reach = 1;
    for (const Complex& s : gens.generators())
      reach = std::max({reach, std::abs(x.lowest_degree() - s.highest_degree()),
                        std::abs(x.highest_degree() - s.lowest_degree())});
    report.window = reach + 1;
  }

  auto scan = [&](bool b_side) -> std::pair<std::optional<int>, std::optional<HomWitness>> {
    for (int step = 0; step <= 2 * report.window; ++step) {
      // b side prefers downward shifts first, a side upward
      int mag = (step + 1) / 2;
      bool second = (step % 2) == 0 && step > 0;
      int n = step == 0 ? 0 : (b_side ? (second ? mag : -mag) : (second ? -mag : mag));
      if (std::abs(n) > report.window) continue;
      MembershipVerdict v = b_side ? in_B(suspend(x, n), gens) : in_A_bar(suspend(x, n), gens);
      if (!v.member) return {n, std::move(v.witness)};
    }
    return {std::nullopt, std::nullopt};
  };
  auto [bn, bw] = scan(true);
  report.b_break = bn;
  report.b_witness = std::move(bw);
  auto [an, aw] = scan(false);
  report.a_break = an;
  report.a_witness = std::move(aw);
  return report;
}

AdjacencyReport adjacency_report(const GeneratorSet& gens, const std::vector<Complex>& test_objects,
                                 std::size_t max_iter) {
  (void)max_iter;
  AdjacencyReport report;

  // hypothesis (1): rigidity, Hom(S, Sigma^i S') = 0 for i > 0
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b) {
      const Complex& sa = gens.minimized()[a];
      const Complex& sb = gens.minimized()[b];
      ShiftWindow w = window_of(sa, sb);
      for (int i = 1; !w.empty() && i <= w.hi; ++i) {
        std::size_t d = hom_dimension(sa, sb, i);
        if (d == 0) continue;
        report.rigidity_pass = false;
        HomSpace hs = HomSpace::compute(gens.generators()[a], gens.generators()[b], i);
        report.rigidity_failures.push_back(PairWitness{a, b, i, d, hs.representatives().front()});
      }
    }

  // hypothesis (2): generation, probed over the test corpus
  report.generation = generating_diagnostic(gens, test_objects);
  report.established = report.rigidity_pass && report.generation.pass;

  // For a single degree-0 stalk covering every vertex once, the shared class
  // is detected by cohomology: B-membership iff H^{>0} = 0.
  bool applicable = gens.size() == 1;
  if (applicable) {
    const Complex& s = gens.generators()[0];
    applicable = !s.empty() && s.degree_span() == 1 && s.lowest_degree() == 0;
    if (applicable) {
      std::vector<int> counts(s.algebra()->quiver().vertex_count(), 0);
      for (int v : s.term(0)) ++counts[v];
      for (int c : counts) applicable = applicable && c == 1;
    }
  }
  if (applicable) {
    report.cross_validation = Verdict::Pass;
    for (std::size_t oi = 0; oi < test_objects.size(); ++oi) {
      bool member = in_B(test_objects[oi], gens).member;
      bool positive_h = false;
      for (const auto& [deg, dim] : cohomology_dims(test_objects[oi]))
        if (deg > 0 && dim > 0) positive_h = true;
      if (member != !positive_h) {
        report.cross_validation = Verdict::Fail;
        report.cross_validation_failures.push_back(oi);
      }
    }
  }
  return report;
}

}  // namespace cotstruct
