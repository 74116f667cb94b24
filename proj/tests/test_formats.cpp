#include <doctest.h>

#include "cotstruct/formats.hpp"
#include "cotstruct/hom_space.hpp"
#include "cotstruct/random_complex.hpp"
#include "helpers.hpp"

using namespace cotstruct;
using namespace cotstruct::testing;

TEST_CASE("algebra files parse and round-trip") {
  std::string text =
      "format: algebra/1\n"
      "field: 5\n"
      "vertices: 1 2\n"
      "arrow: a 1 2\n";
  AlgebraPtr a = parse_algebra_text(text);
  CHECK(a->path_count() == 3);
  CHECK(a->field().characteristic() == 5);
  CHECK(serialize_algebra(*a) == text);
  CHECK(*parse_algebra_text(serialize_algebra(*a)) == *a);
}

TEST_CASE("algebra files reject bad input with line numbers") {
  CHECK_THROWS_AS(parse_algebra_text("format: algebra/1\nvertices: 1\nbogus: x\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text("vertices: 1\n"), ParseError);  // missing format
  CHECK_THROWS_AS(parse_algebra_text("format: algebra/1\nvertices: 1 2\narrow: a 1 2\narrow: b 2 1\n"),
                  ParseError);  // cycle
  CHECK_THROWS_AS(parse_algebra_text("format: algebra/1\nfield: 6\nvertices: 1\n"), ParseError);
  try {
    parse_algebra_text("format: algebra/1\nvertices: 1\nbogus: x\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("complex files parse, serialize, and round-trip") {
  AlgebraPtr a = parse_algebra_text("format: algebra/1\nfield: 5\nvertices: 1 2\narrow: a 1 2\n");
  std::string text =
      "format: complex/1\n"
      "algebra: a2.alg\n"
      "term 0: 1 1\n"
      "term 1: 2\n"
      "diff 0:\n"
      "  a | 2*a\n";
  Complex x = parse_complex_text(text, a);
  CHECK(x.term(0).size() == 2);
  CHECK(x.term(1).size() == 1);
  CHECK_FALSE(x.diff(0).is_zero());

  Complex again = parse_complex_text(serialize_complex(x, "a2.alg"), a);
  CHECK(again == x);
  CHECK(serialize_complex(again, "a2.alg") == serialize_complex(x, "a2.alg"));
}

TEST_CASE("entry grammar") {
  AlgebraPtr a = parse_algebra_text("format: algebra/1\nfield: 5\nvertices: 1 2\narrow: a 1 2\n");
  std::string base =
      "format: complex/1\n"
      "algebra: x\n"
      "term 0: 1\n"
      "term 1: 2\n"
      "diff 0:\n";
  // signs and repeated terms combine
  Complex x = parse_complex_text(base + "  a + 3*a - 2*a\n", a);
  CHECK(entry_to_string(x.diff(0).at(0, 0)) == "2*a");

  AlgebraPtr q = parse_algebra_text("format: algebra/1\nfield: rational\nvertices: 1\n");
  Complex y = parse_complex_text(
      "format: complex/1\nalgebra: x\nterm 0: 1 1\nterm 1: 1\ndiff 0:\n  2*e_1 | -1/3*e_1\n", q);
  CHECK(entry_to_string(y.diff(0).at(0, 1)) == "-1/3*e_1");
  CHECK(cohomology_dims(y) == std::map<int, std::size_t>{{0, 1}});
}

TEST_CASE("complex files reject violations with locations") {
  AlgebraPtr a = parse_algebra_text("format: algebra/1\nfield: 5\nvertices: 1 2\narrow: a 1 2\n");
  std::string base = "format: complex/1\nalgebra: x\n";

  // d o d != 0
  CHECK_THROWS_AS(parse_complex_text(base +
                                         "term 0: 1\nterm 1: 1\nterm 2: 1\n"
                                         "diff 0:\n  e_1\ndiff 1:\n  e_1\n",
                                     a),
                  ParseError);
  // entry outside e_j A e_i
  CHECK_THROWS_AS(parse_complex_text(base + "term 0: 1\nterm 1: 2\ndiff 0:\n  e_1\n", a), ParseError);
  // wrong entry count
  CHECK_THROWS_AS(parse_complex_text(base + "term 0: 1 1\nterm 1: 2\ndiff 0:\n  a\n", a), ParseError);
  // wrong row count
  CHECK_THROWS_AS(parse_complex_text(base + "term 0: 1\nterm 1: 2 2\ndiff 0:\n  a\n", a), ParseError);
  // unknown vertex
  CHECK_THROWS_AS(parse_complex_text(base + "term 0: 3\n", a), ParseError);
  // unknown path
  CHECK_THROWS_AS(parse_complex_text(base + "term 0: 1\nterm 1: 2\ndiff 0:\n  b\n", a), ParseError);
  // duplicate term line
  CHECK_THROWS_AS(parse_complex_text(base + "term 0: 1\nterm 0: 1\n", a), ParseError);
  // unknown key
  CHECK_THROWS_AS(parse_complex_text(base + "terms 0: 1\n", a), ParseError);
  // diff without surrounding terms
  CHECK_THROWS_AS(parse_complex_text(base + "term 0: 1\ndiff 2:\n  e_1\n", a), ParseError);
}

TEST_CASE("random complexes are reproducible and valid") {
  AlgebraPtr a = parse_algebra_text("format: algebra/1\nfield: 5\nvertices: 1 2\narrow: a 1 2\n");
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Complex x = random_complex(a, RandomSpec{seed, 5, 3});
    Complex y = random_complex(a, RandomSpec{seed, 5, 3});
    CHECK(x == y);
    CHECK(serialize_complex(x, "r") == serialize_complex(y, "r"));
    // re-parses to the same complex (the constructor re-checks d o d = 0)
    CHECK(parse_complex_text(serialize_complex(x, "r"), a) == x);
  }
  // span 1 forces stalks
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Complex x = random_complex(a, RandomSpec{seed, 1, 3});
    if (!x.empty()) CHECK(x.degree_span() == 1);
  }
  CHECK_THROWS(random_complex(a, RandomSpec{1, 0, 2}));
}

TEST_CASE("round-trip preserves hom dimensions against a probe") {
  AlgebraPtr a = parse_algebra_text("format: algebra/1\nfield: 5\nvertices: 1 2\narrow: a 1 2\n");
  Complex s = Complex::stalk(a, {0, 1}, 0);
  for (std::uint64_t seed = 20; seed <= 26; ++seed) {
    Complex x = random_complex(a, RandomSpec{seed, 4, 2});
    Complex back = parse_complex_text(serialize_complex(x, "r"), a);
    auto w = hom_shift_window(s, x);
    if (!w) continue;
    for (int n = w->first; n <= w->second; ++n) CHECK(hom_dimension(s, back, n) == hom_dimension(s, x, n));
  }
}
