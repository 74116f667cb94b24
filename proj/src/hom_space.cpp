#include "cotstruct/hom_space.hpp"

#include <stdexcept>

#include "cotstruct/minimal.hpp"

namespace cotstruct {

namespace {

// Coordinate layout for graded maps X^k -> Y^{k+shift}: one coordinate per
// (degree, target summand, source summand, hom-basis path), degrees ascending,
// blocks row-major, paths in enumeration order.
struct Layout {
  struct Deg {
    int k;
    ProjSummands src, dst;
    std::size_t base;
    std::vector<std::size_t> entry_base;  // per (t, s), row-major
  };
  std::vector<Deg> degs;
  std::map<int, std::size_t> deg_of;
  std::size_t total = 0;

  const Deg* find(int k) const {
    auto it = deg_of.find(k);
    return it == deg_of.end() ? nullptr : &degs[it->second];
  }
};

Layout make_layout(const PathAlgebra& A, const Complex& x, const Complex& y, int shift) {
  Layout L;
  if (x.empty() || y.empty()) return L;
  for (int k = x.lowest_degree(); k <= x.highest_degree(); ++k) {
    ProjSummands src = x.term(k);
    ProjSummands dst = y.term(k + shift);
    if (src.empty() || dst.empty()) continue;
    Layout::Deg d;
    d.k = k;
    d.src = src;
    d.dst = dst;
    d.base = L.total;
    d.entry_base.resize(dst.size() * src.size());
    std::size_t off = L.total;
    for (std::size_t t = 0; t < dst.size(); ++t)
      for (std::size_t s = 0; s < src.size(); ++s) {
        d.entry_base[t * src.size() + s] = off;
        off += A.hom_basis(src[s], dst[t]).size();
      }
    L.total = off;
    L.deg_of[k] = L.degs.size();
    L.degs.push_back(std::move(d));
  }
  return L;
}

// Adds the coefficients of an algebra element sitting in block (t, s) of the
// layout degree k into column `col` of `m`, optionally negated.
void add_coeffs(Matrix& m, std::size_t col, const PathAlgebra& A, const Layout& L, int k, std::size_t t,
                std::size_t s, const AlgebraElement& x, bool negate) {
  if (x.is_zero()) return;
  const Layout::Deg* d = L.find(k);
  if (!d) throw std::logic_error("coefficient outside layout");
  std::size_t base = d->entry_base[t * d->src.size() + s];
  for (const auto& [pidx, c] : x.coeffs()) {
    std::size_t row = base + A.hom_basis_position(pidx);
    m.set(row, col, negate ? m.at(row, col) - c : m.at(row, col) + c);
  }
}

Matrix pack(const PathAlgebra& A, const Layout& L, const std::map<int, ProjMap>& comps) {
  Matrix v(A.field(), L.total, 1);
  for (const auto& [k, f] : comps) {
    const Layout::Deg* d = L.find(k);
    if (!d) {
      if (!f.is_zero()) throw std::logic_error("component outside layout");
      continue;
    }
    for (std::size_t t = 0; t < d->dst.size(); ++t)
      for (std::size_t s = 0; s < d->src.size(); ++s)
        add_coeffs(v, 0, A, L, k, t, s, f.at(t, s), false);
  }
  return v;
}

std::map<int, ProjMap> unpack(AlgebraPtr A, const Layout& L, const Matrix& col, std::size_t c) {
  std::map<int, ProjMap> comps;
  for (const auto& d : L.degs) {
    ProjMap f = ProjMap::zero(A, d.dst, d.src);
    bool nonzero = false;
    for (std::size_t t = 0; t < d.dst.size(); ++t)
      for (std::size_t s = 0; s < d.src.size(); ++s) {
        const std::vector<int>& basis = A->hom_basis(d.src[s], d.dst[t]);
        std::size_t base = d.entry_base[t * d.src.size() + s];
        std::map<int, Scalar> coeffs;
        for (std::size_t p = 0; p < basis.size(); ++p) {
          const Scalar& x = col.at(base + p, c);
          if (!x.is_zero()) coeffs.emplace(basis[p], x);
        }
        if (!coeffs.empty()) {
          f.set(t, s, A->element(std::move(coeffs)));
          nonzero = true;
        }
      }
    if (nonzero) comps.emplace(d.k, std::move(f));
  }
  return comps;
}

// Matrix of the twisted commutator: unknowns laid out by `L`, values by `D`
// (the layout one shift higher). Column per unknown coordinate.
Matrix commutator_matrix(const PathAlgebra& A, const Complex& x, const Complex& y, int shift, const Layout& L,
                         const Layout& D) {
  Matrix m(A.field(), D.total, L.total);
  bool flip = (shift % 2) != 0;
  for (const auto& d : L.degs) {
    for (std::size_t t = 0; t < d.dst.size(); ++t)
      for (std::size_t s = 0; s < d.src.size(); ++s) {
        const std::vector<int>& basis = A.hom_basis(d.src[s], d.dst[t]);
        std::size_t base = d.entry_base[t * d.src.size() + s];
        for (std::size_t p = 0; p < basis.size(); ++p) {
          std::size_t col = base + p;
          AlgebraElement pi = A.path_element(basis[p]);
          // (-1)^shift d_Y o f lands in defect degree k
          if (D.find(d.k)) {
            ProjMap dy = y.diff(d.k + shift);
            for (std::size_t t2 = 0; t2 < dy.dst().size(); ++t2) {
              AlgebraElement v = dy.at(t2, t) * pi;
              add_coeffs(m, col, A, D, d.k, t2, s, v, flip);
            }
          }
          // -f o d_X lands in defect degree k-1
          if (D.find(d.k - 1)) {
            ProjMap dx = x.diff(d.k - 1);
            for (std::size_t s2 = 0; s2 < dx.src().size(); ++s2) {
              AlgebraElement v = pi * dx.at(s, s2);
              add_coeffs(m, col, A, D, d.k - 1, t, s2, v, true);
            }
          }
        }
      }
  }
  return m;
}

// Matrix of h |-> (-1)^shift d_Y h + h d_X from homotopy coordinates `H` into
// chain-map coordinates `L`.
Matrix boundary_matrix(const PathAlgebra& A, const Complex& x, const Complex& y, int shift, const Layout& H,
                       const Layout& L) {
  Matrix m(A.field(), L.total, H.total);
  bool flip = (shift % 2) != 0;
  for (const auto& d : H.degs) {
    for (std::size_t t = 0; t < d.dst.size(); ++t)
      for (std::size_t s = 0; s < d.src.size(); ++s) {
        const std::vector<int>& basis = A.hom_basis(d.src[s], d.dst[t]);
        std::size_t base = d.entry_base[t * d.src.size() + s];
        for (std::size_t p = 0; p < basis.size(); ++p) {
          std::size_t col = base + p;
          AlgebraElement pi = A.path_element(basis[p]);
          if (L.find(d.k)) {
            ProjMap dy = y.diff(d.k + shift - 1);
            for (std::size_t t2 = 0; t2 < dy.dst().size(); ++t2) {
              AlgebraElement v = dy.at(t2, t) * pi;
              add_coeffs(m, col, A, L, d.k, t2, s, v, flip);
            }
          }
          if (L.find(d.k - 1)) {
            ProjMap dx = x.diff(d.k - 1);
            for (std::size_t s2 = 0; s2 < dx.src().size(); ++s2) {
              AlgebraElement v = pi * dx.at(s, s2);
              add_coeffs(m, col, A, L, d.k - 1, t, s2, v, false);
            }
          }
        }
      }
  }
  return m;
}

}  // namespace

HomSpace HomSpace::compute(const Complex& x, const Complex& y, int shift) {
  if (!(*x.algebra() == *y.algebra())) throw std::invalid_argument("hom across algebras");
  const PathAlgebra& A = *x.algebra();

  HomSpace hs(x, y, shift);

  Layout L = make_layout(A, x, y, shift);
  Layout D = make_layout(A, x, y, shift + 1);
  Layout H = make_layout(A, x, y, shift - 1);

  Matrix M = commutator_matrix(A, x, y, shift, L, D);
  Matrix K = kernel_basis(M);  // chain maps
  Matrix Bd = boundary_matrix(A, x, y, shift, H, L);

  hs.ambient_ = K.cols();
  hs.boundary_ = rank(Bd);

  Rref combined = rref(Bd.hstack(K));
  if (combined.rank != hs.ambient_) throw std::logic_error("boundaries escape the cycle space");
  std::vector<std::size_t> rep_cols;
  for (std::size_t c : combined.pivot_cols)
    if (c >= Bd.cols()) rep_cols.push_back(c - Bd.cols());
  Matrix reps = K.columns(rep_cols);

  for (std::size_t c = 0; c < reps.cols(); ++c)
    hs.reps_.emplace_back(x, y, shift, unpack(x.algebra(), L, reps, c));

  hs.decomposer_ = Bd.hstack(reps);
  hs.boundary_cols_ = Bd.cols();
  return hs;
}

std::vector<Scalar> HomSpace::class_coordinates(const ChainMap& f) const {
  if (f.src() != x_ || f.tgt() != y_ || f.shift() != shift_)
    throw std::invalid_argument("class_coordinates: map belongs to a different hom space");
  Layout L = make_layout(*x_.algebra(), x_, y_, shift_);
  Matrix w = pack(*x_.algebra(), L, f.components());
  auto sol = solve(decomposer_, w);
  if (!sol) throw std::logic_error("chain map outside its own hom space");
  std::vector<Scalar> coords;
  for (std::size_t i = 0; i < reps_.size(); ++i) coords.push_back(sol->at(boundary_cols_ + i, 0));
  return coords;
}

HomSpaceBasis hom_space(const Complex& x, const Complex& y, int shift) {
  return HomSpace::compute(x, y, shift).basis();
}

std::size_t hom_dimension(const Complex& x, const Complex& y, int shift) {
  // homotopy-invariant, so shrink both sides first
  Complex xm = minimal_model(x).model;
  Complex ym = minimal_model(y).model;
  const PathAlgebra& A = *xm.algebra();
  Layout L = make_layout(A, xm, ym, shift);
  if (L.total == 0) return 0;
  Layout D = make_layout(A, xm, ym, shift + 1);
  Layout H = make_layout(A, xm, ym, shift - 1);
  std::size_t cycles = L.total - rank(commutator_matrix(A, xm, ym, shift, L, D));
  std::size_t boundaries = rank(boundary_matrix(A, xm, ym, shift, H, L));
  return cycles - boundaries;
}

std::optional<Homotopy> is_null_homotopic(const ChainMap& f) {
  const PathAlgebra& A = *f.src().algebra();
  Layout L = make_layout(A, f.src(), f.tgt(), f.shift());
  Layout H = make_layout(A, f.src(), f.tgt(), f.shift() - 1);
  Matrix Bd = boundary_matrix(A, f.src(), f.tgt(), f.shift(), H, L);
  Matrix w = pack(A, L, f.components());
  auto sol = solve(Bd, w);
  if (!sol) return std::nullopt;

  Homotopy h{f.src(), f.tgt(), f.shift(), unpack(f.src().algebra(), H, *sol, 0)};

  // re-verify the witness: f = (-1)^shift d_Y h + h d_X, degree-wise
  bool flip = (f.shift() % 2) != 0;
  auto h_comp = [&](int k) {
    auto it = h.components.find(k);
    if (it != h.components.end()) return it->second;
    return ProjMap::zero(f.src().algebra(), f.tgt().term(k + f.shift() - 1), f.src().term(k));
  };
  if (!f.src().empty() && !f.tgt().empty()) {
    for (int k = f.src().lowest_degree(); k <= f.src().highest_degree(); ++k) {
      ProjMap dyh = f.tgt().diff(k + f.shift() - 1).compose(h_comp(k));
      if (flip) dyh = dyh.negate();
      ProjMap hdx = h_comp(k + 1).compose(f.src().diff(k));
      if (!(dyh + hdx - f.component(k)).is_zero()) throw std::logic_error("homotopy witness failed re-check");
    }
  }
  return h;
}

bool is_contractible(const Complex& x) { return minimal_model(x).model.empty(); }

std::optional<std::pair<int, int>> hom_shift_window(const Complex& x, const Complex& y) {
  if (x.empty() || y.empty()) return std::nullopt;
  // maps X -> Sigma^n Y need the supports [loX, hiX] and [loY - n, hiY - n] to meet
  return std::make_pair(y.lowest_degree() - x.highest_degree(), y.highest_degree() - x.lowest_degree());
}

}  // namespace cotstruct
