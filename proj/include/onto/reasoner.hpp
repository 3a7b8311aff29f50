#pragma once

#include <memory>

#include "onto/axioms.hpp"
#include "onto/ontology.hpp"
#include "onto/taxonomy.hpp"

namespace onto {

struct ReasonerOptions {
  // Upper bound on worker threads for the per-concept satisfiability
  // screening phase of classification. Results do not depend on it.
  int threads = 1;
  // Testing knob: skip the told-closure fast path even when eligible.
  bool force_general_classification = false;
};

// Sound and complete entailment checking and classification for the
// supported fragment (ALCH + transitive roles + domain/range), built on a
// tableau satisfiability procedure with lazy unfolding of atomic-LHS
// axioms, internalization of the remaining GCIs, role-hierarchy aware
// quantifier propagation, transitivity propagation and subset blocking.
//
// A Reasoner snapshots the ontology at construction. Methods are not
// safe to call concurrently from multiple threads; classification manages
// its own internal parallelism.
class Reasoner {
 public:
  explicit Reasoner(const Ontology& ontology, ReasonerOptions options = {});

  // True iff some model of the ontology gives the concept a non-empty
  // extension.
  bool is_satisfiable(Concept c) const;

  bool entails(const Axiom& axiom) const;

  // Shorthand for entails(SubClassOf(sub, sup)).
  bool subsumes(Concept sub, Concept sup) const;

  bool consistent() const;

  Taxonomy classify() const;

  const Ontology& ontology() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

bool is_satisfiable(const Ontology& ontology, Concept c);
bool entails(const Ontology& ontology, const Axiom& axiom);
Taxonomy classify(const Ontology& ontology, ReasonerOptions options = {});

}  // namespace onto
