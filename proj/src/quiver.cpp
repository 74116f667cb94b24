#include "cotstruct/quiver.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace cotstruct {

Quiver::Quiver(std::vector<std::string> vertex_labels,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows)
    : vertex_labels_(std::move(vertex_labels)) {
  if (vertex_labels_.empty()) throw std::invalid_argument("quiver needs at least one vertex");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertex_labels_.size(); ++i) {
    if (vertex_labels_[i].empty()) throw std::invalid_argument("empty vertex label");
    if (!index.emplace(vertex_labels_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate vertex label: " + vertex_labels_[i]);
  }
  std::set<std::string> arrow_labels;
  for (const auto& [label, src, tgt] : arrows) {
    if (label.empty()) throw std::invalid_argument("empty arrow label");
    if (index.count(label)) throw std::invalid_argument("arrow label collides with vertex: " + label);
    if (!arrow_labels.insert(label).second) throw std::invalid_argument("duplicate arrow label: " + label);
    auto s = index.find(src);
    auto t = index.find(tgt);
    if (s == index.end()) throw std::invalid_argument("arrow " + label + ": unknown source " + src);
    if (t == index.end()) throw std::invalid_argument("arrow " + label + ": unknown target " + tgt);
    arrows_.push_back(Arrow{label, s->second, t->second});
  }

  // Kahn's algorithm; a leftover vertex means a directed cycle.
  std::vector<int> indeg(vertex_labels_.size(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<int> queue;
  for (std::size_t v = 0; v < vertex_labels_.size(); ++v)
    if (indeg[v] == 0) queue.push_back(static_cast<int>(v));
  std::size_t seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) queue.push_back(a.target);
  }
  if (seen != vertex_labels_.size()) throw std::invalid_argument("quiver has a directed cycle");
}

int Quiver::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < vertex_labels_.size(); ++i)
    if (vertex_labels_[i] == label) return static_cast<int>(i);
  return -1;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertex_labels_ != b.vertex_labels_) return false;
  if (a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const Arrow &x = a.arrows_[i], &y = b.arrows_[i];
    if (x.label != y.label || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

}  // namespace cotstruct
