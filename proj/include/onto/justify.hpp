#pragma once

#include <map>
#include <string>
#include <vector>

#include "onto/axioms.hpp"
#include "onto/ontology.hpp"

namespace onto {

// A minimal axiom set entailing `entailed`: the set entails it, and no
// proper subset does. `sources` records the origin ontology per axiom
// (invalid Iri when unrecorded).
struct Justification {
  Axiom entailed;
  std::vector<Axiom> axioms;   // canonical order
  std::vector<Iri> sources;    // parallel to axioms

  static int compare(const Justification& a, const Justification& b);
};

struct JustifyResult {
  std::vector<Justification> justifications;  // canonical order
  // False when the hitting-set exploration hit its node budget before the
  // enumeration was provably complete.
  bool complete = true;
};

// Black-box justification enumeration: expand a signature-connected subset
// until it entails the target, minimize by deletion, then enumerate
// further justifications with a hitting-set tree (depth-first, bounded by
// `node_budget`). Throws PreconditionError when the target is not entailed.
JustifyResult justify(const Ontology& ontology, const Axiom& target,
                      int max_count, int node_budget = 10000);

enum class RenderMode { Ids, Names };

// Deterministic indented text block: the entailed axiom, then one line per
// justification axiom with its source in brackets. Names mode substitutes
// labels where available.
std::string render_explanation(const Justification& justification,
                               const std::map<Iri, std::string>& labels,
                               RenderMode mode);

// Manchester-ish single-axiom rendering used by reports.
std::string render_axiom(const Axiom& axiom,
                         const std::map<Iri, std::string>& labels,
                         RenderMode mode);

}  // namespace onto
