#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "cotstruct/complex.hpp"

namespace cotstruct {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

/// Algebra files ("format: algebra/1"): field spec, vertices, arrows.
/// The field line may be omitted; the default is $COTSTRUCT_FIELD or F_5.
AlgebraPtr parse_algebra_text(const std::string& text);
AlgebraPtr load_algebra_file(const std::filesystem::path& path);
std::string serialize_algebra(const PathAlgebra& algebra);

/// Complex files ("format: complex/1"): an algebra reference, per-degree
/// summand lists and differential blocks with entries written as formal sums
/// of scalar multiples of paths ("a + 2*e_1"). The algebra line is resolved
/// relative to the complex file by the file loader; the text parser takes the
/// algebra directly and only requires the line to be present.
Complex parse_complex_text(const std::string& text, AlgebraPtr algebra);
std::string serialize_complex(const Complex& x, const std::string& algebra_ref);

/// Loads complexes while sharing one PathAlgebra instance per canonical
/// algebra path.
class AlgebraRegistry {
 public:
  AlgebraPtr load(const std::filesystem::path& path);

 private:
  std::map<std::string, AlgebraPtr> cache_;
};

struct LoadedComplex {
  Complex complex;
  std::filesystem::path algebra_path;
};
LoadedComplex load_complex_file(const std::filesystem::path& path, AlgebraRegistry& registry);

/// Canonical text of one block-matrix entry (used by serializers and reports).
std::string entry_to_string(const AlgebraElement& x);

}  // namespace cotstruct
