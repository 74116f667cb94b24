#include "cotstruct/path_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace cotstruct {

namespace {

std::vector<std::string> arrow_label_sequence(const Quiver& q, const Path& p) {
  std::vector<std::string> seq;
  seq.reserve(p.arrows.size());
  for (int a : p.arrows) seq.push_back(q.arrows()[a].label);
  return seq;
}

}  // namespace

PathAlgebra::PathAlgebra(Quiver quiver, Field field) : quiver_(std::move(quiver)), field_(field) {
  const std::size_t V = quiver_.vertex_count();

  // Breadth-first path enumeration from each vertex, lexicographic by arrow label.
  std::vector<int> arrow_order(quiver_.arrows().size());
  for (std::size_t i = 0; i < arrow_order.size(); ++i) arrow_order[i] = static_cast<int>(i);
  std::sort(arrow_order.begin(), arrow_order.end(), [&](int a, int b) {
    return quiver_.arrows()[a].label < quiver_.arrows()[b].label;
  });

  trivial_.assign(V, -1);
  for (std::size_t v = 0; v < V; ++v) {
    std::vector<Path> frontier{Path{static_cast<int>(v), static_cast<int>(v), {}}};
    trivial_[v] = static_cast<int>(paths_.size());
    paths_.push_back(frontier[0]);
    while (!frontier.empty()) {
      std::vector<Path> next;
      for (const Path& p : frontier)
        for (int a : arrow_order)
          if (quiver_.arrows()[a].source == p.target) {
            Path ext = p;
            ext.arrows.push_back(a);
            ext.target = quiver_.arrows()[a].target;
            next.push_back(ext);
          }
      std::sort(next.begin(), next.end(), [&](const Path& x, const Path& y) {
        return arrow_label_sequence(quiver_, x) < arrow_label_sequence(quiver_, y);
      });
      for (const Path& p : next) paths_.push_back(p);
      frontier = std::move(next);
    }
  }

  // Composition table: paths_[i] * paths_[j] = "j then i".
  std::map<std::pair<int, std::vector<int>>, int> lookup;  // (source, arrows) -> index
  for (std::size_t idx = 0; idx < paths_.size(); ++idx)
    lookup[{paths_[idx].source, paths_[idx].arrows}] = static_cast<int>(idx);
  mult_.assign(paths_.size(), std::vector<int>(paths_.size(), -1));
  for (std::size_t i = 0; i < paths_.size(); ++i)
    for (std::size_t j = 0; j < paths_.size(); ++j) {
      if (paths_[i].source != paths_[j].target) continue;
      std::vector<int> arrows = paths_[j].arrows;
      arrows.insert(arrows.end(), paths_[i].arrows.begin(), paths_[i].arrows.end());
      auto it = lookup.find({paths_[j].source, arrows});
      if (it == lookup.end()) throw std::logic_error("composite path missing from enumeration");
      mult_[i][j] = it->second;
    }

  proj_basis_.assign(V, {});
  hom_basis_.assign(V * V, {});
  hom_pos_.assign(paths_.size(), 0);
  for (std::size_t idx = 0; idx < paths_.size(); ++idx) {
    proj_basis_[paths_[idx].target].push_back(static_cast<int>(idx));
    auto& bucket = hom_basis_[paths_[idx].target * V + paths_[idx].source];
    hom_pos_[idx] = bucket.size();
    bucket.push_back(static_cast<int>(idx));
  }
}

std::shared_ptr<const PathAlgebra> PathAlgebra::make(Quiver quiver, Field field) {
  return std::shared_ptr<const PathAlgebra>(new PathAlgebra(std::move(quiver), field));
}

std::string PathAlgebra::path_name(int idx) const {
  const Path& p = paths_[idx];
  if (p.arrows.empty()) return "e_" + quiver_.vertex_label(p.source);
  std::string name;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) name += '.';
    name += quiver_.arrows()[p.arrows[i]].label;
  }
  return name;
}

int PathAlgebra::path_index_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < paths_.size(); ++i)
    if (path_name(static_cast<int>(i)) == name) return static_cast<int>(i);
  return -1;
}

AlgebraElement PathAlgebra::zero() const { return AlgebraElement(shared_from_this(), {}); }

AlgebraElement PathAlgebra::idempotent(int vertex) const { return path_element(trivial_[vertex]); }

AlgebraElement PathAlgebra::path_element(int idx) const {
  return AlgebraElement(shared_from_this(), {{idx, Scalar::one(field_)}});
}

AlgebraElement PathAlgebra::element(std::map<int, Scalar> coeffs) const {
  return AlgebraElement(shared_from_this(), std::move(coeffs));
}

std::vector<AlgebraElement> PathAlgebra::hom_projectives(int i, int j) const {
  std::vector<AlgebraElement> basis;
  for (int idx : hom_basis(i, j)) basis.push_back(path_element(idx));
  return basis;
}

Matrix PathAlgebra::element_to_matrix(const AlgebraElement& x, int i, int j) const {
  if (!x.supported_in_hom(i, j))
    throw std::invalid_argument("element not supported in e_" + quiver_.vertex_label(j) + "*A*e_" +
                                quiver_.vertex_label(i));
  const std::vector<int>& src = projective_basis(i);
  const std::vector<int>& dst = projective_basis(j);
  std::map<int, std::size_t> dst_pos;
  for (std::size_t r = 0; r < dst.size(); ++r) dst_pos[dst[r]] = r;

  Matrix m(field_, dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c)
    for (const auto& [pidx, coeff] : x.coeffs()) {
      int prod = compose_paths(pidx, src[c]);
      if (prod < 0) continue;
      std::size_t r = dst_pos.at(prod);
      m.set(r, c, m.at(r, c) + coeff);
    }
  return m;
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, std::map<int, Scalar> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_) throw std::invalid_argument("element needs an algebra");
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->first < 0 || static_cast<std::size_t>(it->first) >= algebra_->path_count())
      throw std::invalid_argument("path index out of range");
    if (it->second.field() != algebra_->field()) throw std::invalid_argument("coefficient from wrong field");
    it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
  }
}

Scalar AlgebraElement::coeff(int path_idx) const {
  auto it = coeffs_.find(path_idx);
  return it == coeffs_.end() ? Scalar::zero(algebra_->field()) : it->second;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (!(*algebra_ == *o.algebra_)) throw std::invalid_argument("elements over different algebras");
  std::map<int, Scalar> out = coeffs_;
  for (const auto& [idx, c] : o.coeffs_) {
    auto it = out.find(idx);
    if (it == out.end())
      out.emplace(idx, c);
    else
      it->second += c;
  }
  return AlgebraElement(algebra_, std::move(out));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator-() const {
  std::map<int, Scalar> out;
  for (const auto& [idx, c] : coeffs_) out.emplace(idx, -c);
  return AlgebraElement(algebra_, std::move(out));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  if (!(*algebra_ == *o.algebra_)) throw std::invalid_argument("elements over different algebras");
  std::map<int, Scalar> out;
  for (const auto& [i, ci] : coeffs_)
    for (const auto& [j, cj] : o.coeffs_) {
      int prod = algebra_->compose_paths(i, j);
      if (prod < 0) continue;
      Scalar term = ci * cj;
      auto it = out.find(prod);
      if (it == out.end())
        out.emplace(prod, std::move(term));
      else
        it->second += term;
    }
  return AlgebraElement(algebra_, std::move(out));
}

AlgebraElement AlgebraElement::scale(const Scalar& c) const {
  std::map<int, Scalar> out;
  for (const auto& [idx, x] : coeffs_) out.emplace(idx, x * c);
  return AlgebraElement(algebra_, std::move(out));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return *a.algebra_ == *b.algebra_ && a.coeffs_ == b.coeffs_;
}

bool AlgebraElement::supported_in_hom(int i, int j) const {
  for (const auto& [idx, c] : coeffs_) {
    const Path& p = algebra_->path(idx);
    if (p.source != i || p.target != j) return false;
  }
  return true;
}

std::string AlgebraElement::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += c.str() + "*";
    out += algebra_->path_name(idx);
  }
  return out;
}

}  // namespace cotstruct
