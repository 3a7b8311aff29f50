#pragma once

#include <set>

#include "onto/iri.hpp"

namespace onto {

class Ontology;

// Concept and role names of interest. The two namespaces are disjoint: the
// same Iri may in principle appear in both sets, but is then two entities.
struct Signature {
  std::set<Iri> concepts;
  std::set<Iri> roles;

  bool contains_concept(Iri iri) const { return concepts.count(iri) != 0; }
  bool contains_role(Iri iri) const { return roles.count(iri) != 0; }
  bool empty() const { return concepts.empty() && roles.empty(); }
  std::size_t size() const { return concepts.size() + roles.size(); }

  Signature& unite(const Signature& other);

  static Signature union_of(const Signature& a, const Signature& b);
  static Signature intersection(const Signature& a, const Signature& b);
  static Signature difference(const Signature& a, const Signature& b);

  bool subset_of(const Signature& other) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.concepts == b.concepts && a.roles == b.roles;
  }
};

// All concept and role Iris syntactically occurring in the ontology's
// axioms; owl:Thing / owl:Nothing are not part of the signature.
Signature signature_of(const Ontology& ontology);

}  // namespace onto
