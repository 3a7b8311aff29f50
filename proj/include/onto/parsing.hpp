#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onto/ontology.hpp"

namespace onto {

enum class Severity { Warning, Error };

struct ParseDiagnostic {
  Severity severity = Severity::Error;
  int line = 1;
  std::string message;
};

// Errors imply no ontology is produced; warnings accompany a produced one.
struct ParseResult {
  std::optional<Ontology> ontology;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return ontology.has_value(); }
  bool has_errors() const;
};

// OBO 1.2 flat files, translated into the DL model:
//   [Term]    id -> atomic concept, name -> label,
//             is_a: X              -> SubClassOf(self, X)
//             relationship: R X    -> SubClassOf(self, Exists(R, X))
//             intersection_of: ... -> EquivalentClasses(self, And(genus,
//                                     Exists(R, X), ...))
//             disjoint_from: X     -> DisjointClasses(self, X)
//             is_obsolete: true    -> stanza skipped with a warning
//   [Typedef] id -> role, is_a -> SubRoleOf, is_transitive -> TransitiveRole,
//             domain/range -> RoleDomain/RoleRange
// Identifiers "PFX:NNN" are canonicalized to "PFX_NNN". xref lines are
// recognized but carry no logical content here and are dropped.
ParseResult parse_obo(std::string_view text);

// OWL functional-style syntax, restricted to the constructs this model can
// express; any other construct is skipped with a warning. The prefixes
// owl:, rdf:, rdfs: and xsd: are predeclared.
ParseResult parse_ofn(std::string_view text);

// Deterministic functional-syntax serialization: fixed prefix header,
// axioms in canonical order, then label annotations. The output re-parses
// to a structurally equal ontology.
std::string serialize_ofn(const Ontology& ontology);

}  // namespace onto
