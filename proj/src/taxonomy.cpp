#include "onto/taxonomy.hpp"

#include <algorithm>

namespace onto {

Taxonomy::Taxonomy(std::vector<Node> nodes,
                   std::vector<std::pair<std::size_t, std::size_t>> edges,
                   bool inconsistent)
    : nodes_(std::move(nodes)), edges_(std::move(edges)),
      inconsistent_(inconsistent) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].is_top) top_ = i;
    if (nodes_[i].is_bottom) bottom_ = i;
    std::sort(nodes_[i].members.begin(), nodes_[i].members.end());
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  parents_.resize(nodes_.size());
  for (auto [child, parent] : edges_) parents_[child].push_back(parent);
}

std::optional<std::size_t> Taxonomy::node_of(Iri concept_iri) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& m = nodes_[i].members;
    if (std::binary_search(m.begin(), m.end(), concept_iri)) return i;
  }
  return std::nullopt;
}

bool Taxonomy::reaches(std::size_t child, std::size_t parent) const {
  if (child == parent) return true;
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<std::size_t> stack{child};
  seen[child] = 1;
  while (!stack.empty()) {
    auto n = stack.back();
    stack.pop_back();
    for (auto p : parents_[n]) {
      if (p == parent) return true;
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return false;
}

bool Taxonomy::subsumed(Iri a, Iri b) const {
  auto na = node_of(a);
  auto nb = node_of(b);
  if (!na || !nb) return false;
  return reaches(*na, *nb);
}

std::vector<Iri> Taxonomy::unsatisfiable() const {
  return nodes_[bottom_].members;
}

}  // namespace onto
