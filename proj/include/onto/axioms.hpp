#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "onto/concepts.hpp"
#include "onto/signature.hpp"

namespace onto {

struct SubClassOf {
  Concept sub;
  Concept sup;
};

// Members are deduplicated and canonically ordered on construction, so
// EquivalentClasses({A,B}) and EquivalentClasses({B,A}) are one axiom.
struct EquivalentClasses {
  std::vector<Concept> classes;
};

struct DisjointClasses {
  std::vector<Concept> classes;
};

struct SubRoleOf {
  Iri sub;
  Iri sup;
};

struct TransitiveRole {
  Iri role;
};

struct RoleDomain {
  Iri role;
  Concept concept_expr;
};

struct RoleRange {
  Iri role;
  Concept concept_expr;
};

enum class AxiomKind : std::uint8_t {
  SubClassOf,
  EquivalentClasses,
  DisjointClasses,
  SubRoleOf,
  TransitiveRole,
  RoleDomain,
  RoleRange,
};

class Axiom {
 public:
  Axiom(SubClassOf a) : node_(std::move(a)) {}
  Axiom(EquivalentClasses a);
  Axiom(DisjointClasses a);
  Axiom(SubRoleOf a) : node_(std::move(a)) {}
  Axiom(TransitiveRole a) : node_(std::move(a)) {}
  Axiom(RoleDomain a) : node_(std::move(a)) {}
  Axiom(RoleRange a) : node_(std::move(a)) {}

  AxiomKind kind() const { return static_cast<AxiomKind>(node_.index()); }

  template <typename T>
  const T& as() const { return std::get<T>(node_); }
  template <typename T>
  const T* as_if() const { return std::get_if<T>(&node_); }

  // Semantics-preserving reduction to GCIs plus role axioms:
  //   EquivalentClasses -> pairwise mutual SubClassOf
  //   DisjointClasses   -> pairwise SubClassOf(And(Ci,Cj), Bottom)
  //   RoleDomain(R,C)   -> SubClassOf(Exists(R,Top), C)
  //   RoleRange(R,C)    -> SubClassOf(Top, Forall(R,C))
  std::vector<Axiom> normalized() const;

  void signature_into(Signature& sig) const;

  std::string to_string() const;  // canonical functional-style line

  static int compare(const Axiom& a, const Axiom& b);
  friend bool operator==(const Axiom& a, const Axiom& b);
  friend bool operator!=(const Axiom& a, const Axiom& b) { return !(a == b); }
  std::size_t hash() const;

 private:
  std::variant<SubClassOf, EquivalentClasses, DisjointClasses, SubRoleOf,
               TransitiveRole, RoleDomain, RoleRange>
      node_;
};

struct AxiomHash {
  std::size_t operator()(const Axiom& a) const noexcept { return a.hash(); }
};

}  // namespace onto
