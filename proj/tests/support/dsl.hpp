#pragma once

// Terse builders shared by the test suites.

#include <initializer_list>
#include <string_view>
#include <vector>

#include "onto/axioms.hpp"
#include "onto/ontology.hpp"

namespace onto::testing {

inline Iri iri(std::string_view s) { return Iri::of(s); }
inline Concept atom(std::string_view s) { return Concept::atomic(Iri::of(s)); }
inline Concept top() { return Concept::top(); }
inline Concept bot() { return Concept::bottom(); }
inline Concept neg(Concept c) { return Concept::negation(c); }
inline Concept land(std::vector<Concept> ms) {
  return Concept::intersection(std::move(ms));
}
inline Concept lor(std::vector<Concept> ms) {
  return Concept::union_of(std::move(ms));
}
inline Concept some(std::string_view r, Concept f) {
  return Concept::some(Iri::of(r), f);
}
inline Concept only(std::string_view r, Concept f) {
  return Concept::only(Iri::of(r), f);
}
inline Axiom sub(Concept a, Concept b) { return SubClassOf{a, b}; }
inline Axiom equiv(Concept a, Concept b) { return EquivalentClasses{{a, b}}; }
inline Axiom disjoint(Concept a, Concept b) { return DisjointClasses{{a, b}}; }
inline Axiom subrole(std::string_view r, std::string_view s) {
  return SubRoleOf{Iri::of(r), Iri::of(s)};
}
inline Axiom trans(std::string_view r) { return TransitiveRole{Iri::of(r)}; }
inline Axiom domain(std::string_view r, Concept c) {
  return RoleDomain{Iri::of(r), c};
}
inline Axiom range(std::string_view r, Concept c) {
  return RoleRange{Iri::of(r), c};
}

inline Ontology onto_of(std::initializer_list<Axiom> axioms,
                        std::string_view id = "test") {
  Ontology o(Iri::of(id));
  for (const auto& a : axioms) o.add(a);
  return o;
}

}  // namespace onto::testing
