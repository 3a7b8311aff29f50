#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "onto/axioms.hpp"
#include "onto/justify.hpp"
#include "onto/ontology.hpp"
#include "onto/reasoner.hpp"
#include "onto/signature.hpp"

namespace onto {

// The five approximation shapes: (i) A <= B, (ii) A <= not B,
// (iii) A <= some R.B, (iv) A <= only R.B, (v) R <= S, where A and B are
// atomic concepts (including owl:Thing / owl:Nothing) and R, S roles.
enum class WitnessKind : std::uint8_t {
  AtomicSub,    // i
  AtomicDisj,   // ii
  ExistsSub,    // iii
  ForallSub,    // iv
  RoleSub,      // v
};

struct ShapeSet {
  bool i = false, ii = false, iii = false, iv = false, v = false;

  static ShapeSet all() { return {true, true, true, true, true}; }
  static ShapeSet only_i() { return {true, false, false, false, false}; }
  // Accepts "i,iii,v" or "all"; returns nullopt on unknown tokens.
  static std::optional<ShapeSet> parse(std::string_view spec);
  bool any() const { return i || ii || iii || iv || v; }
};

// One witness consequence held by `new_in` and missing from `missing_in`.
// lhs/rhs are atomic concepts or owl:Thing / owl:Nothing.
struct DiffEntry {
  WitnessKind shape = WitnessKind::AtomicSub;
  Concept lhs;
  Iri role;  // shapes iii/iv; also carries R for shape v (rhs_role = S)
  Concept rhs;
  Iri rhs_role;           // shape v only
  bool equivalence = false;  // both directions of shape (i) are new
  Iri new_in, missing_in;
  std::vector<Justification> justifications;

  // The witness as an axiom (the equivalence flag expands to one direction;
  // use both_directions() for the pair).
  Axiom axiom() const;
  std::vector<Axiom> axioms() const;  // two axioms when equivalence
};

struct DiffOptions {
  ShapeSet shapes = ShapeSet::only_i();
  // Keep concepts that are unsatisfiable in the new ontology inside the
  // pair enumeration instead of segregating them.
  bool include_unsatisfiable = false;
  int max_justifications = 0;
};

struct DiffResult {
  std::vector<DiffEntry> entries;
  // Concepts unsatisfiable in o_new but satisfiable in o_old (excluded
  // from the enumeration unless include_unsatisfiable is set).
  std::vector<Iri> new_unsatisfiable;
};

// Complete duplicate-free candidate stream over the scope, minus syntactic
// tautologies. `excluded` concepts are dropped from the enumeration.
std::vector<Axiom> candidates(const Signature& scope, ShapeSet shapes,
                              const std::vector<Iri>& excluded = {});

// { a in candidates | o_new entails a and o_old does not }, with mutual
// shape-(i) pairs coalesced into single equivalence entries.
DiffResult logical_diff(const Ontology& o_new, const Ontology& o_old,
                        const Signature& scope, const DiffOptions& options = {});

}  // namespace onto
