#pragma once

#include <string>
#include <vector>

namespace cotstruct {

struct Arrow {
  std::string label;
  int source;  // vertex index
  int target;
};

/// Finite acyclic quiver. Vertex and arrow labels are unique; acyclicity is
/// checked on construction so the path basis of the algebra is finite.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertex_labels,
         std::vector<std::tuple<std::string, std::string, std::string>> arrows);

  std::size_t vertex_count() const { return vertex_labels_.size(); }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int vertex_index(const std::string& label) const;  // -1 if unknown
  const std::string& vertex_label(int v) const { return vertex_labels_[v]; }

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<Arrow> arrows_;
};

}  // namespace cotstruct
