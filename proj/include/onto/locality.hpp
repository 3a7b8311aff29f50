#pragma once

#include <string_view>
#include <vector>

#include "onto/axioms.hpp"
#include "onto/ontology.hpp"
#include "onto/parsing.hpp"
#include "onto/signature.hpp"

namespace onto {

// Star alternates Bottom and Top extraction to a fixpoint; its result is a
// subset of both plain modules for the same inputs.
enum class LocalityKind { Bottom, Top, Star };

// Syntactic locality test. `kind` must be Bottom or Top.
bool is_local(const Axiom& axiom, const Signature& sig, LocalityKind kind);

// Locality-based module for the seed signature: the least fixpoint M such
// that every axiom outside M is local w.r.t. seed + signature(M). Labels
// are restricted to entities the module mentions.
Ontology extract_module(const Ontology& ontology, const Signature& seed,
                        LocalityKind kind);

// Seed signature files: one Iri per line, "role:" prefix for roles,
// '#' comments.
Signature parse_signature_file(std::string_view text,
                               std::vector<ParseDiagnostic>& diagnostics);

}  // namespace onto
