#include "onto/integrate.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

#include "onto/errors.hpp"

namespace onto {

Signature external_signature(const Ontology& ontology,
                             std::string_view prefix) {
  Signature out;
  Signature sig = signature_of(ontology);
  for (auto iri : sig.concepts)
    if (iri.prefix() == prefix) out.concepts.insert(iri);
  for (auto iri : sig.roles)
    if (iri.prefix() == prefix) out.roles.insert(iri);
  return out;
}

namespace {

class IriRewriter {
 public:
  explicit IriRewriter(std::span<const RewriteRule> rules) : rules_(rules) {}

  Iri map(Iri iri) {
    auto it = memo_.find(iri);
    if (it != memo_.end()) return it->second;
    const std::string& s = iri.canonical();
    const RewriteRule* hit = nullptr;
    for (const auto& rule : rules_) {
      if (s.rfind(rule.pattern, 0) != 0) continue;
      if (hit != nullptr) throw RuleCollisionError(s);
      hit = &rule;
    }
    Iri out = iri;
    if (hit != nullptr)
      out = Iri::of(hit->replacement + s.substr(hit->pattern.size()));
    memo_.emplace(iri, out);
    return out;
  }

  Concept map(Concept c) {
    switch (c.kind()) {
      case ConceptKind::Top:
      case ConceptKind::Bottom:
        return c;
      case ConceptKind::Atomic:
        return Concept::atomic(map(c.iri()));
      case ConceptKind::Not:
        return Concept::negation(map(c.child()));
      case ConceptKind::And:
      case ConceptKind::Or: {
        std::vector<Concept> ms;
        for (auto m : c.members()) ms.push_back(map(m));
        return c.kind() == ConceptKind::And
                   ? Concept::intersection(std::move(ms))
                   : Concept::union_of(std::move(ms));
      }
      case ConceptKind::Exists:
        return Concept::some(map(c.role()), map(c.child()));
      case ConceptKind::Forall:
        return Concept::only(map(c.role()), map(c.child()));
    }
    return c;
  }

  Axiom map(const Axiom& axiom) {
    switch (axiom.kind()) {
      case AxiomKind::SubClassOf: {
        const auto& a = axiom.as<SubClassOf>();
        return SubClassOf{map(a.sub), map(a.sup)};
      }
      case AxiomKind::EquivalentClasses: {
        std::vector<Concept> cs;
        for (auto c : axiom.as<EquivalentClasses>().classes)
          cs.push_back(map(c));
        return EquivalentClasses{std::move(cs)};
      }
      case AxiomKind::DisjointClasses: {
        std::vector<Concept> cs;
        for (auto c : axiom.as<DisjointClasses>().classes)
          cs.push_back(map(c));
        return DisjointClasses{std::move(cs)};
      }
      case AxiomKind::SubRoleOf: {
        const auto& a = axiom.as<SubRoleOf>();
        return SubRoleOf{map(a.sub), map(a.sup)};
      }
      case AxiomKind::TransitiveRole:
        return TransitiveRole{map(axiom.as<TransitiveRole>().role)};
      case AxiomKind::RoleDomain: {
        const auto& a = axiom.as<RoleDomain>();
        return RoleDomain{map(a.role), map(a.concept_expr)};
      }
      case AxiomKind::RoleRange: {
        const auto& a = axiom.as<RoleRange>();
        return RoleRange{map(a.role), map(a.concept_expr)};
      }
    }
    return axiom;
  }

 private:
  std::span<const RewriteRule> rules_;
  std::unordered_map<Iri, Iri> memo_;
};

}  // namespace

Ontology normalize_iris(const Ontology& ontology,
                        std::span<const RewriteRule> rules) {
  IriRewriter rw(rules);
  Ontology out(ontology.id());
  const auto& axioms = ontology.axioms();
  for (std::size_t i = 0; i < axioms.size(); ++i)
    out.add(rw.map(axioms[i]), ontology.source(i));
  for (const auto& [iri, label] : ontology.labels()) {
    Iri target = rw.map(iri);
    if (out.label(target) == nullptr) out.set_label(target, label);
  }
  return out;
}

MergeResult merge(std::span<const Ontology> ontologies) {
  MergeResult result;
  if (ontologies.empty()) {
    result.merged = Ontology(Iri::of("merged"));
    return result;
  }
  result.merged = Ontology(ontologies.front().id());
  for (const auto& onto : ontologies) {
    const auto& axioms = onto.axioms();
    for (std::size_t i = 0; i < axioms.size(); ++i) {
      Iri source = onto.source(i);
      result.merged.add(axioms[i], source.valid() ? source : onto.id());
    }
    for (const auto& [iri, label] : onto.labels()) {
      const std::string* existing = result.merged.label(iri);
      if (existing == nullptr) {
        result.merged.set_label(iri, label);
      } else if (*existing != label) {
        result.label_conflicts.push_back(
            iri.canonical() + ": kept \"" + *existing + "\", ignored \"" +
            label + "\" from " + onto.id().canonical());
      }
    }
  }
  return result;
}

std::vector<RewriteRule> parse_rules_file(
    std::string_view text, std::vector<ParseDiagnostic>& diagnostics) {
  std::vector<RewriteRule> rules;
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
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.remove_suffix(1);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      diagnostics.push_back(
          {Severity::Error, lineno, "expected 'pattern<TAB>replacement'"});
      continue;
    }
    auto tidy = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
      return s;
    };
    std::string_view pat = tidy(line.substr(0, tab));
    std::string_view rep = tidy(line.substr(tab + 1));
    if (pat.empty()) {
      diagnostics.push_back({Severity::Error, lineno, "empty pattern"});
      continue;
    }
    rules.push_back({std::string(pat), std::string(rep)});
  }
  return rules;
}

}  // namespace onto
