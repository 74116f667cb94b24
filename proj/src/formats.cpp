#include "cotstruct/formats.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cotstruct {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Raw line with comments stripped; keeps leading whitespace (diff rows are
// recognised by indentation).
struct Line {
  int number;
  std::string text;
};

std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) continue;
    lines.push_back(Line{n, raw});
  }
  return lines;
}

Field default_field() {
  if (const char* env = std::getenv("COTSTRUCT_FIELD")) return Field::parse(env);
  return Field::prime(5);
}

Scalar parse_coeff(const Field& f, const std::string& text, int line) {
  try {
    if (f.is_rational()) return Scalar::parse(f, text);
    // reject rational syntax over a prime field
    if (text.find('/') != std::string::npos) throw std::invalid_argument("rational coefficient over F_p");
    return Scalar::parse(f, text);
  } catch (const std::exception& e) {
    throw ParseError(line, std::string("bad coefficient '") + text + "': " + e.what());
  }
}

int parse_path(const PathAlgebra& algebra, const std::string& name, int line) {
  if (name.rfind("e_", 0) == 0) {
    int v = algebra.quiver().vertex_index(name.substr(2));
    if (v < 0) throw ParseError(line, "unknown vertex in '" + name + "'");
    return algebra.trivial_path(v);
  }
  int idx = algebra.path_index_by_name(name);
  if (idx < 0) throw ParseError(line, "unknown path '" + name + "'");
  return idx;
}

AlgebraElement parse_entry(const PathAlgebra& algebra, const std::string& text, int line) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError(line, "empty matrix entry");
  if (s == "0") return algebra.zero();

  std::map<int, Scalar> coeffs;
  std::size_t pos = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  while (pos < s.size()) {
    std::size_t next = pos;
    while (next < s.size() && s[next] != '+' && s[next] != '-') ++next;
    // a '-' inside a coefficient like "3/-4" is not part of the grammar, so a
    // bare scan for the next sign is safe
    std::string term = trim(s.substr(pos, next - pos));
    if (term.empty()) throw ParseError(line, "dangling sign in entry '" + s + "'");
    std::string coeff_text = "1", path_text = term;
    std::size_t star = term.find('*');
    if (star != std::string::npos) {
      coeff_text = trim(term.substr(0, star));
      path_text = trim(term.substr(star + 1));
    }
    Scalar c = parse_coeff(algebra.field(), coeff_text, line);
    if (negative) c = -c;
    int pidx = parse_path(algebra, path_text, line);
    auto it = coeffs.find(pidx);
    if (it == coeffs.end())
      coeffs.emplace(pidx, c);
    else
      it->second += c;
    if (next < s.size()) negative = s[next] == '-';
    pos = next + 1;
  }
  return algebra.element(std::move(coeffs));
}

}  // namespace

std::string entry_to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : x.coeffs()) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) cs = cs.substr(1);
    if (cs != "1") out += cs + "*";
    out += x.algebra()->path_name(idx);
  }
  return out;
}

AlgebraPtr parse_algebra_text(const std::string& text) {
  std::optional<Field> field;
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  bool format_seen = false;

  for (const Line& ln : logical_lines(text)) {
    std::string s = trim(ln.text);
    std::size_t colon = s.find(':');
    if (colon == std::string::npos) throw ParseError(ln.number, "expected 'key: value'");
    std::string key = trim(s.substr(0, colon));
    std::string value = trim(s.substr(colon + 1));
    if (key == "format") {
      if (value != "algebra/1") throw ParseError(ln.number, "unsupported format '" + value + "'");
      format_seen = true;
    } else if (key == "field") {
      try {
        field = Field::parse(value);
      } catch (const std::exception& e) {
        throw ParseError(ln.number, e.what());
      }
    } else if (key == "vertices") {
      vertices = split_ws(value);
      if (vertices.empty()) throw ParseError(ln.number, "no vertices given");
    } else if (key == "arrow") {
      std::vector<std::string> parts = split_ws(value);
      if (parts.size() != 3) throw ParseError(ln.number, "expected 'arrow: label source target'");
      arrows.emplace_back(parts[0], parts[1], parts[2]);
    } else {
      throw ParseError(ln.number, "unknown key '" + key + "'");
    }
  }
  if (!format_seen) throw ParseError(1, "missing 'format: algebra/1' line");
  if (vertices.empty()) throw ParseError(1, "missing 'vertices:' line");
  try {
    return PathAlgebra::make(Quiver(vertices, arrows), field ? *field : default_field());
  } catch (const std::exception& e) {
    throw ParseError(1, e.what());
  }
}

AlgebraPtr load_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open algebra file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str());
}

std::string serialize_algebra(const PathAlgebra& algebra) {
  std::string out = "format: algebra/1\n";
  out += "field: " + algebra.field().str() + "\n";
  out += "vertices:";
  for (const auto& v : algebra.quiver().vertex_labels()) out += " " + v;
  out += "\n";
  for (const auto& a : algebra.quiver().arrows())
    out += "arrow: " + a.label + " " + algebra.quiver().vertex_label(a.source) + " " +
           algebra.quiver().vertex_label(a.target) + "\n";
  return out;
}

Complex parse_complex_text(const std::string& text, AlgebraPtr algebra) {
  std::map<int, ProjSummands> terms;
  std::map<int, std::vector<std::pair<int, std::string>>> diff_rows;  // degree -> (line, row text)
  bool format_seen = false, algebra_seen = false;
  int current_diff = 0;
  bool in_diff = false;

  for (const Line& ln : logical_lines(text)) {
    bool indented = ln.text[0] == ' ' || ln.text[0] == '\t';
    std::string s = trim(ln.text);
    if (indented) {
      if (!in_diff) throw ParseError(ln.number, "matrix row outside a 'diff' block");
      diff_rows[current_diff].emplace_back(ln.number, s);
      continue;
    }
    in_diff = false;
    std::size_t colon = s.find(':');
    if (colon == std::string::npos) throw ParseError(ln.number, "expected 'key: value'");
    std::string key = trim(s.substr(0, colon));
    std::string value = trim(s.substr(colon + 1));
    if (key == "format") {
      if (value != "complex/1") throw ParseError(ln.number, "unsupported format '" + value + "'");
      format_seen = true;
    } else if (key == "algebra") {
      if (value.empty()) throw ParseError(ln.number, "empty algebra reference");
      algebra_seen = true;
    } else if (key.rfind("term ", 0) == 0) {
      int degree;
      try {
        degree = std::stoi(key.substr(5));
      } catch (...) {
        throw ParseError(ln.number, "bad term degree in '" + key + "'");
      }
      if (terms.count(degree)) throw ParseError(ln.number, "duplicate term for degree " + std::to_string(degree));
      ProjSummands summands;
      for (const std::string& label : split_ws(value)) {
        int v = algebra->quiver().vertex_index(label);
        if (v < 0) throw ParseError(ln.number, "unknown vertex '" + label + "'");
        summands.push_back(v);
      }
      if (summands.empty()) throw ParseError(ln.number, "empty summand list; omit the line instead");
      terms[degree] = std::move(summands);
    } else if (key.rfind("diff ", 0) == 0) {
      try {
        current_diff = std::stoi(key.substr(5));
      } catch (...) {
        throw ParseError(ln.number, "bad diff degree in '" + key + "'");
      }
      if (!value.empty()) throw ParseError(ln.number, "rows of a diff block go on indented lines");
      if (diff_rows.count(current_diff))
        throw ParseError(ln.number, "duplicate diff for degree " + std::to_string(current_diff));
      diff_rows[current_diff] = {};
      in_diff = true;
    } else {
      throw ParseError(ln.number, "unknown key '" + key + "'");
    }
  }
  if (!format_seen) throw ParseError(1, "missing 'format: complex/1' line");
  if (!algebra_seen) throw ParseError(1, "missing 'algebra:' line");

  std::map<int, ProjMap> diffs;
  for (const auto& [degree, rows] : diff_rows) {
    auto src_it = terms.find(degree);
    auto dst_it = terms.find(degree + 1);
    if (src_it == terms.end() || dst_it == terms.end())
      throw ParseError(rows.empty() ? 1 : rows.front().first,
                       "diff " + std::to_string(degree) + " needs terms in degrees " + std::to_string(degree) +
                           " and " + std::to_string(degree + 1));
    const ProjSummands& src = src_it->second;
    const ProjSummands& dst = dst_it->second;
    if (rows.size() != dst.size())
      throw ParseError(rows.empty() ? 1 : rows.front().first,
                       "diff " + std::to_string(degree) + ": expected " + std::to_string(dst.size()) +
                           " rows, got " + std::to_string(rows.size()));
    ProjMap d = ProjMap::zero(algebra, dst, src);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      const auto& [line, row_text] = rows[t];
      std::vector<std::string> cells;
      std::string cell;
      std::istringstream in(row_text);
      while (std::getline(in, cell, '|')) cells.push_back(trim(cell));
      if (cells.size() != src.size())
        throw ParseError(line, "expected " + std::to_string(src.size()) + " entries, got " +
                                   std::to_string(cells.size()));
      for (std::size_t s = 0; s < cells.size(); ++s) {
        AlgebraElement x = parse_entry(*algebra, cells[s], line);
        if (!x.supported_in_hom(src[s], dst[t]))
          throw ParseError(line, "entry (" + std::to_string(t) + "," + std::to_string(s) +
                                     ") of diff " + std::to_string(degree) + " lies outside e_j*A*e_i");
        d.set(t, s, std::move(x));
      }
    }
    if (!d.is_zero()) diffs.emplace(degree, std::move(d));
  }

  try {
    return Complex(algebra, std::move(terms), std::move(diffs));
  } catch (const std::exception& e) {
    throw ParseError(1, e.what());
  }
}

std::string serialize_complex(const Complex& x, const std::string& algebra_ref) {
  std::string out = "format: complex/1\n";
  out += "algebra: " + algebra_ref + "\n";
  const Quiver& q = x.algebra()->quiver();
  for (const auto& [n, summands] : x.terms()) {
    out += "term " + std::to_string(n) + ":";
    for (int v : summands) out += " " + q.vertex_label(v);
    out += "\n";
  }
  for (const auto& [n, summands] : x.terms()) {
    (void)summands;
    ProjMap d = x.diff(n);
    if (d.is_zero()) continue;
    out += "diff " + std::to_string(n) + ":\n";
    for (std::size_t t = 0; t < d.dst().size(); ++t) {
      out += " ";
      for (std::size_t s = 0; s < d.src().size(); ++s) {
        out += " " + entry_to_string(d.at(t, s));
        if (s + 1 < d.src().size()) out += " |";
      }
      out += "\n";
    }
  }
  return out;
}

AlgebraPtr AlgebraRegistry::load(const std::filesystem::path& path) {
  std::string key = std::filesystem::weakly_canonical(path).string();
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  AlgebraPtr a = load_algebra_file(path);
  cache_.emplace(key, a);
  return a;
}

LoadedComplex load_complex_file(const std::filesystem::path& path, AlgebraRegistry& registry) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open complex file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  // resolve the algebra reference relative to the complex file
  std::filesystem::path algebra_path;
  for (const Line& ln : logical_lines(text)) {
    std::string s = trim(ln.text);
    if (s.rfind("algebra:", 0) == 0) {
      std::filesystem::path ref = trim(s.substr(8));
      algebra_path = ref.is_absolute() ? ref : path.parent_path() / ref;
      break;
    }
  }
  if (algebra_path.empty()) throw ParseError(1, "missing 'algebra:' line in " + path.string());
  AlgebraPtr algebra = registry.load(algebra_path);
  return LoadedComplex{parse_complex_text(text, algebra), algebra_path};
}

}  // namespace cotstruct
