#include "onto/locality.hpp"

#include <algorithm>
#include <cctype>

#include "onto/errors.hpp"

namespace onto {
namespace {

// Bottom-locality grammar: concepts equivalent to owl:Nothing (bot) or
// owl:Thing (top) once every entity outside the signature is interpreted
// as empty.
bool b_bot(Concept c, const Signature& sig);
bool b_top(Concept c, const Signature& sig);

bool b_bot(Concept c, const Signature& sig) {
  switch (c.kind()) {
    case ConceptKind::Bottom: return true;
    case ConceptKind::Top: return false;
    case ConceptKind::Atomic: return !sig.contains_concept(c.iri());
    case ConceptKind::Not: return b_top(c.child(), sig);
    case ConceptKind::And: {
      for (auto m : c.members())
        if (b_bot(m, sig)) return true;
      return false;
    }
    case ConceptKind::Or: {
      for (auto m : c.members())
        if (!b_bot(m, sig)) return false;
      return true;
    }
    case ConceptKind::Exists:
      return !sig.contains_role(c.role()) || b_bot(c.child(), sig);
    case ConceptKind::Forall:
      return false;
  }
  return false;
}

bool b_top(Concept c, const Signature& sig) {
  switch (c.kind()) {
    case ConceptKind::Top: return true;
    case ConceptKind::Bottom: return false;
    case ConceptKind::Atomic: return false;
    case ConceptKind::Not: return b_bot(c.child(), sig);
    case ConceptKind::And: {
      for (auto m : c.members())
        if (!b_top(m, sig)) return false;
      return true;
    }
    case ConceptKind::Or: {
      for (auto m : c.members())
        if (b_top(m, sig)) return true;
      return false;
    }
    case ConceptKind::Forall:
      return !sig.contains_role(c.role()) || b_top(c.child(), sig);
    case ConceptKind::Exists:
      return false;
  }
  return false;
}

// Top-locality grammar: entities outside the signature behave as owl:Thing
// (concepts) and the universal role (roles).
bool t_bot(Concept c, const Signature& sig);
bool t_top(Concept c, const Signature& sig);

bool t_top(Concept c, const Signature& sig) {
  switch (c.kind()) {
    case ConceptKind::Top: return true;
    case ConceptKind::Bottom: return false;
    case ConceptKind::Atomic: return !sig.contains_concept(c.iri());
    case ConceptKind::Not: return t_bot(c.child(), sig);
    case ConceptKind::And: {
      for (auto m : c.members())
        if (!t_top(m, sig)) return false;
      return true;
    }
    case ConceptKind::Or: {
      for (auto m : c.members())
        if (t_top(m, sig)) return true;
      return false;
    }
    case ConceptKind::Forall:
      return t_top(c.child(), sig);
    case ConceptKind::Exists:
      return !sig.contains_role(c.role()) && t_top(c.child(), sig);
  }
  return false;
}

bool t_bot(Concept c, const Signature& sig) {
  switch (c.kind()) {
    case ConceptKind::Bottom: return true;
    case ConceptKind::Top: return false;
    case ConceptKind::Atomic: return false;
    case ConceptKind::Not: return t_top(c.child(), sig);
    case ConceptKind::And: {
      for (auto m : c.members())
        if (t_bot(m, sig)) return true;
      return false;
    }
    case ConceptKind::Or: {
      for (auto m : c.members())
        if (!t_bot(m, sig)) return false;
      return true;
    }
    case ConceptKind::Exists:
      return t_bot(c.child(), sig);
    case ConceptKind::Forall:
      return false;
  }
  return false;
}

}  // namespace

bool is_local(const Axiom& axiom, const Signature& sig, LocalityKind kind) {
  if (kind == LocalityKind::Star)
    throw PreconditionError("is_local expects Bottom or Top locality");
  const bool bottom = kind == LocalityKind::Bottom;
  auto bot = [&](Concept c) { return bottom ? b_bot(c, sig) : t_bot(c, sig); };
  auto top = [&](Concept c) { return bottom ? b_top(c, sig) : t_top(c, sig); };

  switch (axiom.kind()) {
    case AxiomKind::SubClassOf: {
      const auto& a = axiom.as<SubClassOf>();
      return bot(a.sub) || top(a.sup);
    }
    case AxiomKind::EquivalentClasses: {
      const auto& cs = axiom.as<EquivalentClasses>().classes;
      bool all_bot = true, all_top = true;
      for (auto c : cs) {
        all_bot = all_bot && bot(c);
        all_top = all_top && top(c);
      }
      return all_bot || all_top;
    }
    case AxiomKind::DisjointClasses: {
      const auto& cs = axiom.as<DisjointClasses>().classes;
      std::size_t outside = 0;
      for (auto c : cs)
        if (!bot(c)) ++outside;
      return outside <= 1;
    }
    case AxiomKind::SubRoleOf: {
      const auto& a = axiom.as<SubRoleOf>();
      return bottom ? !sig.contains_role(a.sub) : !sig.contains_role(a.sup);
    }
    case AxiomKind::TransitiveRole:
      return !sig.contains_role(axiom.as<TransitiveRole>().role);
    case AxiomKind::RoleDomain: {
      const auto& a = axiom.as<RoleDomain>();
      if (bottom && !sig.contains_role(a.role)) return true;
      return top(a.concept_expr);
    }
    case AxiomKind::RoleRange: {
      const auto& a = axiom.as<RoleRange>();
      if (bottom && !sig.contains_role(a.role)) return true;
      return top(a.concept_expr);
    }
  }
  return false;
}

namespace {

Ontology extract_once(const Ontology& ontology, const Signature& seed,
                      LocalityKind kind) {
  const auto& axioms = ontology.axioms();
  std::vector<char> in_module(axioms.size(), 0);
  Signature sig = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < axioms.size(); ++i) {
      if (in_module[i]) continue;
      if (is_local(axioms[i], sig, kind)) continue;
      in_module[i] = 1;
      axioms[i].signature_into(sig);
      grew = true;
    }
  }

  Ontology module(ontology.id());
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    if (in_module[i]) module.add(axioms[i], ontology.source(i));
  }
  Signature msig = signature_of(module);
  for (const auto& [iri, label] : ontology.labels()) {
    if (msig.contains_concept(iri) || msig.contains_role(iri))
      module.set_label(iri, label);
  }
  return module;
}

}  // namespace

Ontology extract_module(const Ontology& ontology, const Signature& seed,
                        LocalityKind kind) {
  if (kind != LocalityKind::Star) return extract_once(ontology, seed, kind);
  // Alternate bottom/top extraction until stable, bottom first.
  Ontology current = extract_once(ontology, seed, LocalityKind::Bottom);
  while (true) {
    Ontology next = extract_once(current, seed, LocalityKind::Top);
    next = extract_once(next, seed, LocalityKind::Bottom);
    if (next.size() == current.size()) return next;
    current = std::move(next);
  }
}

Signature parse_signature_file(std::string_view text,
                               std::vector<ParseDiagnostic>& diagnostics) {
  Signature sig;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
      line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.rfind("role:", 0) == 0) {
      std::string_view name = line.substr(5);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front())))
        name.remove_prefix(1);
      if (name.empty()) {
        diagnostics.push_back({Severity::Error, lineno, "role: without a name"});
        continue;
      }
      sig.roles.insert(Iri::of(name));
    } else {
      if (line.find(' ') != std::string_view::npos) {
        diagnostics.push_back(
            {Severity::Error, lineno, "one identifier per line expected"});
        continue;
      }
      sig.concepts.insert(Iri::of(line));
    }
  }
  return sig;
}

}  // namespace onto
