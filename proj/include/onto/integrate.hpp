#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "onto/ontology.hpp"
#include "onto/parsing.hpp"
#include "onto/signature.hpp"

namespace onto {

// All Iris in the ontology's signature whose prefix equals `prefix`.
Signature external_signature(const Ontology& ontology, std::string_view prefix);

// Prefix-rewrite rule: an Iri whose canonical form starts with `pattern`
// is rewritten to `replacement` + tail.
struct RewriteRule {
  std::string pattern;
  std::string replacement;
};

// Applies non-overlapping prefix-rewrite rules to every Iri. Two rules
// matching one Iri raise RuleCollisionError. Iris collapsing onto one
// canonical form merge: their axioms union, first label wins.
Ontology normalize_iris(const Ontology& ontology,
                        std::span<const RewriteRule> rules);

struct MergeResult {
  Ontology merged;
  std::vector<std::string> label_conflicts;
};

// Axiom union with structural dedup; per-axiom provenance records the
// contributing ontology. Labels union first-wins, conflicts reported.
// The merged ontology keeps the first input's id.
MergeResult merge(std::span<const Ontology> ontologies);

// Rules files: "pattern<TAB>replacement" lines, '#' comments.
std::vector<RewriteRule> parse_rules_file(
    std::string_view text, std::vector<ParseDiagnostic>& diagnostics);

}  // namespace onto
