#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cotstruct/matrix.hpp"
#include "cotstruct/quiver.hpp"

namespace cotstruct {

/// A directed path. Arrows are stored in traversal order (first arrow first);
/// the trivial path at a vertex has no arrows.
struct Path {
  int source;
  int target;
  std::vector<int> arrows;  // indices into the quiver's arrow list

  std::size_t length() const { return arrows.size(); }
};

class AlgebraElement;

/// Path algebra of a finite acyclic quiver over an exact field.
///
/// Multiplication is composition-style: x * y is "first y, then x", nonzero
/// only when source(x) == target(y). Consequently e_target * p = p = p * e_source
/// for a path p, the indecomposable projective right module P_v = e_v * A has
/// as basis the paths ending at v, and Hom(P_i, P_j) = e_j * A * e_i is spanned
/// by the paths from i to j acting by left multiplication.
///
/// Paths are enumerated grouped by source vertex (declaration order), then by
/// length, then lexicographically by arrow label, which fixes every basis in
/// the system.
class PathAlgebra : public std::enable_shared_from_this<PathAlgebra> {
 public:
  static std::shared_ptr<const PathAlgebra> make(Quiver quiver, Field field);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }

  std::size_t path_count() const { return paths_.size(); }
  const Path& path(int idx) const { return paths_[idx]; }
  std::string path_name(int idx) const;
  int path_index_by_name(const std::string& name) const;  // -1 if unknown
  int trivial_path(int vertex) const { return trivial_[vertex]; }

  /// Index of path i * path j (composition), or -1 when endpoints mismatch.
  int compose_paths(int i, int j) const { return mult_[i][j]; }

  /// Path basis of P_v = e_v * A: all paths with target v, in enumeration order.
  const std::vector<int>& projective_basis(int vertex) const { return proj_basis_[vertex]; }
  std::size_t projective_dim(int vertex) const { return proj_basis_[vertex].size(); }

  /// Path basis of e_j * A * e_i (all paths i -> j), in enumeration order.
  const std::vector<int>& hom_basis(int i, int j) const { return hom_basis_[j * quiver_.vertex_count() + i]; }

  /// Position of a path within hom_basis(source, target) of its endpoints.
  std::size_t hom_basis_position(int path_idx) const { return hom_pos_[path_idx]; }

  AlgebraElement zero() const;
  AlgebraElement idempotent(int vertex) const;
  AlgebraElement path_element(int idx) const;
  AlgebraElement element(std::map<int, Scalar> coeffs) const;

  /// Basis of Hom(P_i, P_j) as algebra elements (one per path i -> j).
  std::vector<AlgebraElement> hom_projectives(int i, int j) const;

  /// Matrix of left-multiplication-by-x from the path basis of P_i to the path
  /// basis of P_j. Throws if x is not supported in e_j * A * e_i.
  Matrix element_to_matrix(const AlgebraElement& x, int i, int j) const;

  friend bool operator==(const PathAlgebra& a, const PathAlgebra& b) {
    return a.field_ == b.field_ && a.quiver_ == b.quiver_;
  }

 private:
  PathAlgebra(Quiver quiver, Field field);

  Quiver quiver_;
  Field field_;
  std::vector<Path> paths_;
  std::vector<int> trivial_;                  // per vertex
  std::vector<std::vector<int>> mult_;        // [i][j] = index of path_i * path_j or -1
  std::vector<std::vector<int>> proj_basis_;  // per vertex: paths with that target
  std::vector<std::vector<int>> hom_basis_;   // [j*V+i]: paths i -> j
  std::vector<std::size_t> hom_pos_;          // per path: position within its hom basis
};

using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

/// Element of the path algebra: a finite sum of scalar multiples of paths.
/// Zero coefficients are never stored.
class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, std::map<int, Scalar> coeffs);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::map<int, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coeff(int path_idx) const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& o) const;  // bilinear path composition
  AlgebraElement scale(const Scalar& c) const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  /// True when every path in the support runs from vertex i to vertex j.
  bool supported_in_hom(int i, int j) const;

  std::string str() const;

 private:
  AlgebraPtr algebra_;
  std::map<int, Scalar> coeffs_;
};

}  // namespace cotstruct
