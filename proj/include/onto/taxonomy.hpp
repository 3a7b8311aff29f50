#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "onto/iri.hpp"

namespace onto {

// Classification output: a DAG of equivalence classes between the top and
// bottom nodes. Edges are (child, parent) pairs and contain no transitive
// shortcuts; reachability equals entailed subsumption.
class Taxonomy {
 public:
  struct Node {
    std::vector<Iri> members;  // sorted by canonical string
    bool is_top = false;
    bool is_bottom = false;
  };

  Taxonomy(std::vector<Node> nodes, std::vector<std::pair<std::size_t, std::size_t>> edges,
           bool inconsistent);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  std::size_t top() const { return top_; }
  std::size_t bottom() const { return bottom_; }
  bool inconsistent() const { return inconsistent_; }

  std::optional<std::size_t> node_of(Iri concept_iri) const;

  // Reflexive-transitive reachability along child->parent edges.
  bool reaches(std::size_t child, std::size_t parent) const;

  // True iff SubClassOf(a, b) per this taxonomy (both must be classified).
  bool subsumed(Iri a, Iri b) const;

  // Named members of the bottom node.
  std::vector<Iri> unsatisfiable() const;

 private:
  std::vector<Node> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> parents_;  // adjacency by node
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
  bool inconsistent_ = false;
};

}  // namespace onto
