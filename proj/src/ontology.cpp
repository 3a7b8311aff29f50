#include "onto/ontology.hpp"

#include "onto/signature.hpp"

namespace onto {

bool Ontology::add(const Axiom& axiom, Iri source) {
  if (index_.count(axiom) != 0) return false;
  index_.emplace(axiom, axioms_.size());
  axioms_.push_back(axiom);
  sources_.push_back(source);
  return true;
}

void Ontology::set_label(Iri iri, std::string label) {
  labels_[iri] = std::move(label);
}

const std::string* Ontology::label(Iri iri) const {
  auto it = labels_.find(iri);
  return it == labels_.end() ? nullptr : &it->second;
}

bool Ontology::structurally_equal(const Ontology& other) const {
  if (id_ != other.id_) return false;
  if (axioms_.size() != other.axioms_.size()) return false;
  for (const auto& a : axioms_) {
    if (!other.contains(a)) return false;
  }
  return labels_ == other.labels_;
}

Signature& Signature::unite(const Signature& other) {
  concepts.insert(other.concepts.begin(), other.concepts.end());
  roles.insert(other.roles.begin(), other.roles.end());
  return *this;
}

Signature Signature::union_of(const Signature& a, const Signature& b) {
  Signature out = a;
  out.unite(b);
  return out;
}

Signature Signature::intersection(const Signature& a, const Signature& b) {
  Signature out;
  for (auto i : a.concepts)
    if (b.concepts.count(i)) out.concepts.insert(i);
  for (auto i : a.roles)
    if (b.roles.count(i)) out.roles.insert(i);
  return out;
}

Signature Signature::difference(const Signature& a, const Signature& b) {
  Signature out;
  for (auto i : a.concepts)
    if (!b.concepts.count(i)) out.concepts.insert(i);
  for (auto i : a.roles)
    if (!b.roles.count(i)) out.roles.insert(i);
  return out;
}

bool Signature::subset_of(const Signature& other) const {
  for (auto i : concepts)
    if (!other.concepts.count(i)) return false;
  for (auto i : roles)
    if (!other.roles.count(i)) return false;
  return true;
}

Signature signature_of(const Ontology& ontology) {
  Signature sig;
  for (const auto& axiom : ontology.axioms()) axiom.signature_into(sig);
  return sig;
}

}  // namespace onto
