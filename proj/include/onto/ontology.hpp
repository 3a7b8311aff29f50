#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "onto/axioms.hpp"
#include "onto/iri.hpp"

namespace onto {

// Identified, duplicate-free axiom collection with label annotations.
// Axioms keep their insertion order (document order matters for
// deterministic downstream processing); duplicates are detected by
// structural equality. Each axiom optionally records the ontology it came
// from, which merge() fills in and explanations report.
class Ontology {
 public:
  Ontology() = default;
  explicit Ontology(Iri id) : id_(id) {}

  Iri id() const { return id_; }
  void set_id(Iri id) { id_ = id; }

  // Returns false when a structurally equal axiom is already present.
  bool add(const Axiom& axiom) { return add(axiom, Iri()); }
  bool add(const Axiom& axiom, Iri source);

  bool contains(const Axiom& axiom) const { return index_.count(axiom) != 0; }

  const std::vector<Axiom>& axioms() const { return axioms_; }
  std::size_t size() const { return axioms_.size(); }

  // Source ontology id recorded for the axiom at `idx`; invalid Iri when
  // the axiom is native to this ontology.
  Iri source(std::size_t idx) const { return sources_[idx]; }
  void set_source(std::size_t idx, Iri source) { sources_[idx] = source; }

  void set_label(Iri iri, std::string label);
  const std::string* label(Iri iri) const;
  const std::map<Iri, std::string>& labels() const { return labels_; }

  bool structurally_equal(const Ontology& other) const;

 private:
  Iri id_;
  std::vector<Axiom> axioms_;
  std::vector<Iri> sources_;
  std::unordered_map<Axiom, std::size_t, AxiomHash> index_;
  std::map<Iri, std::string> labels_;
};

}  // namespace onto
