#include "onto/axioms.hpp"

#include <algorithm>

namespace onto {
namespace {

std::vector<Concept> canonical_members(std::vector<Concept> cs, bool dedup) {
  std::sort(cs.begin(), cs.end(),
            [](Concept a, Concept b) { return Concept::compare(a, b) < 0; });
  // Equivalence members may be deduplicated; disjointness members may not
  // (a repeated member is how DisjointClasses forces that member empty).
  if (dedup) cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

void collect_concept_signature(Concept c, Signature& sig) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return;
    case ConceptKind::Atomic:
      sig.concepts.insert(c.iri());
      return;
    case ConceptKind::Not:
      collect_concept_signature(c.child(), sig);
      return;
    case ConceptKind::And:
    case ConceptKind::Or:
      for (auto m : c.members()) collect_concept_signature(m, sig);
      return;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      sig.roles.insert(c.role());
      collect_concept_signature(c.child(), sig);
      return;
  }
}

}  // namespace

Axiom::Axiom(EquivalentClasses a)
    : node_(EquivalentClasses{canonical_members(std::move(a.classes), true)}) {}

Axiom::Axiom(DisjointClasses a)
    : node_(DisjointClasses{canonical_members(std::move(a.classes), false)}) {}

std::vector<Axiom> Axiom::normalized() const {
  std::vector<Axiom> out;
  switch (kind()) {
    case AxiomKind::SubClassOf:
    case AxiomKind::SubRoleOf:
    case AxiomKind::TransitiveRole:
      out.push_back(*this);
      break;
    case AxiomKind::EquivalentClasses: {
      const auto& cs = as<EquivalentClasses>().classes;
      if (cs.size() == 1) {
        // degenerate tautology; keep it signature-preserving
        out.push_back(SubClassOf{cs[0], cs[0]});
        break;
      }
      for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          out.push_back(SubClassOf{cs[i], cs[j]});
          out.push_back(SubClassOf{cs[j], cs[i]});
        }
      }
      break;
    }
    case AxiomKind::DisjointClasses: {
      const auto& cs = as<DisjointClasses>().classes;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          out.push_back(SubClassOf{Concept::intersection({cs[i], cs[j]}),
                                   Concept::bottom()});
        }
      }
      break;
    }
    case AxiomKind::RoleDomain: {
      const auto& d = as<RoleDomain>();
      out.push_back(SubClassOf{Concept::some(d.role, Concept::top()),
                               d.concept_expr});
      break;
    }
    case AxiomKind::RoleRange: {
      const auto& r = as<RoleRange>();
      out.push_back(SubClassOf{Concept::top(),
                               Concept::only(r.role, r.concept_expr)});
      break;
    }
  }
  return out;
}

void Axiom::signature_into(Signature& sig) const {
  switch (kind()) {
    case AxiomKind::SubClassOf: {
      const auto& a = as<SubClassOf>();
      collect_concept_signature(a.sub, sig);
      collect_concept_signature(a.sup, sig);
      break;
    }
    case AxiomKind::EquivalentClasses:
      for (auto c : as<EquivalentClasses>().classes)
        collect_concept_signature(c, sig);
      break;
    case AxiomKind::DisjointClasses:
      for (auto c : as<DisjointClasses>().classes)
        collect_concept_signature(c, sig);
      break;
    case AxiomKind::SubRoleOf:
      sig.roles.insert(as<SubRoleOf>().sub);
      sig.roles.insert(as<SubRoleOf>().sup);
      break;
    case AxiomKind::TransitiveRole:
      sig.roles.insert(as<TransitiveRole>().role);
      break;
    case AxiomKind::RoleDomain:
      sig.roles.insert(as<RoleDomain>().role);
      collect_concept_signature(as<RoleDomain>().concept_expr, sig);
      break;
    case AxiomKind::RoleRange:
      sig.roles.insert(as<RoleRange>().role);
      collect_concept_signature(as<RoleRange>().concept_expr, sig);
      break;
  }
}

std::string Axiom::to_string() const {
  switch (kind()) {
    case AxiomKind::SubClassOf: {
      const auto& a = as<SubClassOf>();
      return "SubClassOf(" + a.sub.to_string() + " " + a.sup.to_string() + ")";
    }
    case AxiomKind::EquivalentClasses: {
      std::string out = "EquivalentClasses(";
      bool first = true;
      for (auto c : as<EquivalentClasses>().classes) {
        if (!first) out += ' ';
        first = false;
        out += c.to_string();
      }
      return out + ")";
    }
    case AxiomKind::DisjointClasses: {
      std::string out = "DisjointClasses(";
      bool first = true;
      for (auto c : as<DisjointClasses>().classes) {
        if (!first) out += ' ';
        first = false;
        out += c.to_string();
      }
      return out + ")";
    }
    case AxiomKind::SubRoleOf: {
      const auto& a = as<SubRoleOf>();
      return "SubObjectPropertyOf(:" + a.sub.canonical() + " :" +
             a.sup.canonical() + ")";
    }
    case AxiomKind::TransitiveRole:
      return "TransitiveObjectProperty(:" +
             as<TransitiveRole>().role.canonical() + ")";
    case AxiomKind::RoleDomain: {
      const auto& a = as<RoleDomain>();
      return "ObjectPropertyDomain(:" + a.role.canonical() + " " +
             a.concept_expr.to_string() + ")";
    }
    case AxiomKind::RoleRange: {
      const auto& a = as<RoleRange>();
      return "ObjectPropertyRange(:" + a.role.canonical() + " " +
             a.concept_expr.to_string() + ")";
    }
  }
  return {};
}

namespace {

int compare_iri(Iri a, Iri b) {
  if (a == b) return 0;
  return a.canonical() < b.canonical() ? -1 : 1;
}

int compare_concept_lists(const std::vector<Concept>& a,
                          const std::vector<Concept>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int r = Concept::compare(a[i], b[i]);
    if (r != 0) return r;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

}  // namespace

int Axiom::compare(const Axiom& a, const Axiom& b) {
  if (a.kind() != b.kind())
    return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case AxiomKind::SubClassOf: {
      const auto& x = a.as<SubClassOf>();
      const auto& y = b.as<SubClassOf>();
      int r = Concept::compare(x.sub, y.sub);
      if (r != 0) return r;
      return Concept::compare(x.sup, y.sup);
    }
    case AxiomKind::EquivalentClasses:
      return compare_concept_lists(a.as<EquivalentClasses>().classes,
                                   b.as<EquivalentClasses>().classes);
    case AxiomKind::DisjointClasses:
      return compare_concept_lists(a.as<DisjointClasses>().classes,
                                   b.as<DisjointClasses>().classes);
    case AxiomKind::SubRoleOf: {
      int r = compare_iri(a.as<SubRoleOf>().sub, b.as<SubRoleOf>().sub);
      if (r != 0) return r;
      return compare_iri(a.as<SubRoleOf>().sup, b.as<SubRoleOf>().sup);
    }
    case AxiomKind::TransitiveRole:
      return compare_iri(a.as<TransitiveRole>().role,
                         b.as<TransitiveRole>().role);
    case AxiomKind::RoleDomain: {
      int r = compare_iri(a.as<RoleDomain>().role, b.as<RoleDomain>().role);
      if (r != 0) return r;
      return Concept::compare(a.as<RoleDomain>().concept_expr,
                              b.as<RoleDomain>().concept_expr);
    }
    case AxiomKind::RoleRange: {
      int r = compare_iri(a.as<RoleRange>().role, b.as<RoleRange>().role);
      if (r != 0) return r;
      return Concept::compare(a.as<RoleRange>().concept_expr,
                              b.as<RoleRange>().concept_expr);
    }
  }
  return 0;
}

bool operator==(const Axiom& a, const Axiom& b) {
  return Axiom::compare(a, b) == 0;
}

std::size_t Axiom::hash() const {
  auto mix = [](std::size_t h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  };
  std::size_t h = static_cast<std::size_t>(kind());
  switch (kind()) {
    case AxiomKind::SubClassOf:
      h = mix(h, as<SubClassOf>().sub.id());
      h = mix(h, as<SubClassOf>().sup.id());
      break;
    case AxiomKind::EquivalentClasses:
      for (auto c : as<EquivalentClasses>().classes) h = mix(h, c.id());
      break;
    case AxiomKind::DisjointClasses:
      for (auto c : as<DisjointClasses>().classes) h = mix(h, c.id());
      break;
    case AxiomKind::SubRoleOf:
      h = mix(h, as<SubRoleOf>().sub.id());
      h = mix(h, as<SubRoleOf>().sup.id());
      break;
    case AxiomKind::TransitiveRole:
      h = mix(h, as<TransitiveRole>().role.id());
      break;
    case AxiomKind::RoleDomain:
      h = mix(h, as<RoleDomain>().role.id());
      h = mix(h, as<RoleDomain>().concept_expr.id());
      break;
    case AxiomKind::RoleRange:
      h = mix(h, as<RoleRange>().role.id());
      h = mix(h, as<RoleRange>().concept_expr.id());
      break;
  }
  return h;
}

}  // namespace onto
