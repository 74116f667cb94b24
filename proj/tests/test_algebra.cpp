#include <doctest.h>

#include "cotstruct/path_algebra.hpp"

using namespace cotstruct;

namespace {

AlgebraPtr trivial() { return PathAlgebra::make(Quiver({"1"}, {}), Field::prime(5)); }
AlgebraPtr a2() { return PathAlgebra::make(Quiver({"1", "2"}, {{"a", "1", "2"}}), Field::prime(5)); }
AlgebraPtr a3() {
  return PathAlgebra::make(Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}), Field::prime(5));
}
AlgebraPtr kronecker() {
  return PathAlgebra::make(Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}), Field::prime(5));
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS(Quiver({"1", "1"}, {}));
  CHECK_THROWS(Quiver({"1", "2"}, {{"a", "1", "2"}, {"a", "2", "1"}}));          // duplicate label
  CHECK_THROWS(Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}));          // cycle
  CHECK_THROWS(Quiver({"1"}, {{"a", "1", "1"}}));                                // loop
  CHECK_THROWS(Quiver({"1", "2"}, {{"a", "1", "3"}}));                           // unknown vertex
}

TEST_CASE("path enumeration") {
  CHECK(trivial()->path_count() == 1);
  CHECK(a2()->path_count() == 3);
  CHECK(a3()->path_count() == 6);  // e_1, e_2, e_3, a, b, a.b
  CHECK(kronecker()->path_count() == 4);

  AlgebraPtr A = a3();
  CHECK(A->path_index_by_name("a.b") >= 0);
  CHECK(A->path_index_by_name("b.a") == -1);  // not composable in traversal order
  CHECK(A->path_name(A->trivial_path(0)) == "e_1");
}

TEST_CASE("multiplication follows the composition convention") {
  AlgebraPtr A = a2();
  AlgebraElement e1 = A->idempotent(0), e2 = A->idempotent(1);
  AlgebraElement a = A->path_element(A->path_index_by_name("a"));

  CHECK(e1 * e1 == e1);
  CHECK((e1 * e2).is_zero());
  CHECK(e2 * a == a);  // target-side idempotent acts on the left
  CHECK(a * e1 == a);
  CHECK((a * e2).is_zero());
  CHECK((e1 * a).is_zero());
  CHECK((a * a).is_zero());
}

TEST_CASE("associativity and unit on the whole basis") {
  AlgebraPtr A = a3();
  std::vector<AlgebraElement> basis;
  for (std::size_t i = 0; i < A->path_count(); ++i) basis.push_back(A->path_element(static_cast<int>(i)));

  AlgebraElement unit = A->zero();
  for (std::size_t v = 0; v < A->quiver().vertex_count(); ++v) unit = unit + A->idempotent(static_cast<int>(v));

  for (const auto& x : basis) {
    CHECK(unit * x == x);
    CHECK(x * unit == x);
    for (const auto& y : basis)
      for (const auto& z : basis) CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("hom_projectives dimensions count paths") {
  AlgebraPtr A = a2();
  CHECK(A->hom_projectives(0, 0).size() == 1);
  CHECK(A->hom_projectives(0, 1).size() == 1);  // the arrow
  CHECK(A->hom_projectives(1, 0).empty());      // no paths back

  CHECK(kronecker()->hom_projectives(0, 1).size() == 2);
  CHECK(a3()->hom_projectives(0, 2).size() == 1);  // a.b

  AlgebraPtr T = trivial();
  auto basis = T->hom_projectives(0, 0);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == T->idempotent(0));
}

TEST_CASE("element_to_matrix") {
  AlgebraPtr A = a2();

  CHECK(A->element_to_matrix(A->idempotent(0), 0, 0) == Matrix::identity(A->field(), 1));
  CHECK(A->element_to_matrix(A->zero(), 0, 1).is_zero());

  // P_1 has basis {e_1}; P_2 has basis {a, e_2} in enumeration order (paths
  // from vertex 1 precede paths from vertex 2); a . e_1 = a is its first
  // basis vector
  AlgebraElement a = A->path_element(A->path_index_by_name("a"));
  REQUIRE(A->projective_basis(1).size() == 2);
  CHECK(A->path_name(A->projective_basis(1)[0]) == "a");
  CHECK(A->path_name(A->projective_basis(1)[1]) == "e_2");
  Matrix m = A->element_to_matrix(a, 0, 1);
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 1);
  CHECK(m.at(0, 0).is_one());
  CHECK(m.at(1, 0).is_zero());

  CHECK_THROWS(A->element_to_matrix(a, 1, 0));  // wrong support
}

TEST_CASE("element_to_matrix is functorial") {
  AlgebraPtr A = a3();
  std::size_t V = A->quiver().vertex_count();
  for (std::size_t i = 0; i < V; ++i)
    for (std::size_t j = 0; j < V; ++j)
      for (std::size_t k = 0; k < V; ++k)
        for (const auto& y : A->hom_projectives(static_cast<int>(i), static_cast<int>(j)))
          for (const auto& x : A->hom_projectives(static_cast<int>(j), static_cast<int>(k))) {
            Matrix lhs = A->element_to_matrix(x * y, static_cast<int>(i), static_cast<int>(k));
            Matrix rhs = A->element_to_matrix(x, static_cast<int>(j), static_cast<int>(k)) *
                         A->element_to_matrix(y, static_cast<int>(i), static_cast<int>(j));
            CHECK(lhs == rhs);
          }
}

TEST_CASE("total dimension equals the path count") {
  for (AlgebraPtr A : {trivial(), a2(), a3(), kronecker()}) {
    std::size_t total = 0;
    for (std::size_t v = 0; v < A->quiver().vertex_count(); ++v) total += A->projective_dim(static_cast<int>(v));
    CHECK(total == A->path_count());
  }
}
