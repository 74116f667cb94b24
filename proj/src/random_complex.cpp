#include "cotstruct/random_complex.hpp"

#include <random>

namespace cotstruct {

namespace {

// mt19937_64 output reduced by modulo: the standard pins the generator's
// sequence, so results are stable across platforms (the standard
// distributions are not, hence no uniform_int_distribution here).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Scalar random_scalar(std::mt19937_64& rng, const Field& f) {
  if (!f.is_rational()) return Scalar::of_int(f, static_cast<long long>(draw(rng, f.characteristic())));
  long long num = static_cast<long long>(draw(rng, 9)) - 4;
  long long den = 1 + static_cast<long long>(draw(rng, 3));
  return Scalar::of_rational(Rational(num, den));
}

// Coordinates of module maps src -> dst over the hom path bases.
struct BlockLayout {
  ProjSummands src, dst;
  std::vector<std::size_t> entry_base;
  std::size_t total = 0;
};

BlockLayout block_layout(const PathAlgebra& A, ProjSummands dst, ProjSummands src) {
  BlockLayout L;
  L.src = std::move(src);
  L.dst = std::move(dst);
  L.entry_base.resize(L.dst.size() * L.src.size());
  for (std::size_t t = 0; t < L.dst.size(); ++t)
    for (std::size_t s = 0; s < L.src.size(); ++s) {
      L.entry_base[t * L.src.size() + s] = L.total;
      L.total += A.hom_basis(L.src[s], L.dst[t]).size();
    }
  return L;
}

ProjMap unpack_block(AlgebraPtr A, const BlockLayout& L, const Matrix& col) {
  ProjMap m = ProjMap::zero(A, L.dst, L.src);
  for (std::size_t t = 0; t < L.dst.size(); ++t)
    for (std::size_t s = 0; s < L.src.size(); ++s) {
      const std::vector<int>& basis = A->hom_basis(L.src[s], L.dst[t]);
      std::size_t base = L.entry_base[t * L.src.size() + s];
      std::map<int, Scalar> coeffs;
      for (std::size_t p = 0; p < basis.size(); ++p) {
        const Scalar& c = col.at(base + p, 0);
        if (!c.is_zero()) coeffs.emplace(basis[p], c);
      }
      if (!coeffs.empty()) m.set(t, s, A->element(std::move(coeffs)));
    }
  return m;
}

void pack_block(Matrix& col, std::size_t c, const PathAlgebra& A, const BlockLayout& L, const ProjMap& m) {
  for (std::size_t t = 0; t < L.dst.size(); ++t)
    for (std::size_t s = 0; s < L.src.size(); ++s) {
      std::size_t base = L.entry_base[t * L.src.size() + s];
      for (const auto& [pidx, coeff] : m.at(t, s).coeffs())
        col.set(base + A.hom_basis_position(pidx), c, coeff);
    }
}

}  // namespace

Complex random_complex(AlgebraPtr algebra, const RandomSpec& spec) {
  if (spec.degree_span < 1 || spec.max_rank < 0) throw std::invalid_argument("bad random spec");
  const PathAlgebra& A = *algebra;
  std::mt19937_64 rng(spec.seed);

  int span = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(spec.degree_span)));
  int lo = -static_cast<int>(draw(rng, static_cast<std::uint64_t>(spec.degree_span)));
  std::size_t vertex_count = A.quiver().vertex_count();

  std::map<int, ProjSummands> terms;
  for (int n = lo; n < lo + span; ++n) {
    std::size_t r = draw(rng, static_cast<std::uint64_t>(spec.max_rank) + 1);
    ProjSummands s;
    for (std::size_t i = 0; i < r; ++i) s.push_back(static_cast<int>(draw(rng, vertex_count)));
    if (!s.empty()) terms[n] = std::move(s);
  }

  std::map<int, ProjMap> diffs;
  std::optional<ProjMap> below;  // d^{n-1}
  for (int n = lo; n < lo + span; ++n) {
    auto src_it = terms.find(n);
    auto dst_it = terms.find(n + 1);
    if (src_it == terms.end() || dst_it == terms.end()) {
      below.reset();
      continue;
    }
    BlockLayout L = block_layout(A, dst_it->second, src_it->second);
    Matrix coords(A.field(), L.total, 1);
    if (below && !below->is_zero()) {
      // sample from the kernel of the composition constraint d^n o d^{n-1} = 0
      BlockLayout target = block_layout(A, dst_it->second, below->src());
      Matrix constraint(A.field(), target.total, L.total);
      for (std::size_t c = 0; c < L.total; ++c) {
        Matrix unit(A.field(), L.total, 1);
        unit.set(c, 0, Scalar::one(A.field()));
        ProjMap elem = unpack_block(algebra, L, unit);
        pack_block(constraint, c, A, target, elem.compose(*below));
      }
      Matrix kernel = kernel_basis(constraint);
      Matrix mix(A.field(), kernel.cols(), 1);
      for (std::size_t i = 0; i < kernel.cols(); ++i) mix.set(i, 0, random_scalar(rng, A.field()));
      coords = kernel * mix;
    } else {
      for (std::size_t i = 0; i < L.total; ++i) coords.set(i, 0, random_scalar(rng, A.field()));
    }
    ProjMap d = unpack_block(algebra, L, coords);
    if (!d.is_zero()) {
      below = d;
      diffs.emplace(n, std::move(d));
    } else {
      below.reset();
    }
  }

  return Complex(algebra, std::move(terms), std::move(diffs));
}

}  // namespace cotstruct
