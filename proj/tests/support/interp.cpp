#include "support/interp.hpp"

#include <algorithm>

#include "onto/signature.hpp"

namespace onto::testing {
namespace {

std::set<int> universe(int n) {
  std::set<int> u;
  for (int i = 0; i < n; ++i) u.insert(i);
  return u;
}

}  // namespace

std::set<int> Interpretation::eval(Concept c) const {
  switch (c.kind()) {
    case ConceptKind::Top:
      return universe(domain);
    case ConceptKind::Bottom:
      return {};
    case ConceptKind::Atomic: {
      auto it = concepts.find(c.iri());
      return it == concepts.end() ? std::set<int>{} : it->second;
    }
    case ConceptKind::Not: {
      std::set<int> inner = eval(c.child());
      std::set<int> out;
      for (int i = 0; i < domain; ++i)
        if (!inner.count(i)) out.insert(i);
      return out;
    }
    case ConceptKind::And: {
      std::set<int> out = universe(domain);
      for (auto m : c.members()) {
        std::set<int> me = eval(m);
        std::set<int> keep;
        for (int x : out)
          if (me.count(x)) keep.insert(x);
        out = std::move(keep);
      }
      return out;
    }
    case ConceptKind::Or: {
      std::set<int> out;
      for (auto m : c.members()) {
        for (int x : eval(m)) out.insert(x);
      }
      return out;
    }
    case ConceptKind::Exists: {
      std::set<int> filler = eval(c.child());
      std::set<int> out;
      auto it = roles.find(c.role());
      if (it == roles.end()) return out;
      for (auto [x, y] : it->second)
        if (filler.count(y)) out.insert(x);
      return out;
    }
    case ConceptKind::Forall: {
      std::set<int> filler = eval(c.child());
      std::set<int> out;
      auto it = roles.find(c.role());
      for (int x = 0; x < domain; ++x) {
        bool ok = true;
        if (it != roles.end()) {
          for (auto [a, b] : it->second) {
            if (a == x && !filler.count(b)) {
              ok = false;
              break;
            }
          }
        }
        if (ok) out.insert(x);
      }
      return out;
    }
  }
  return {};
}

bool Interpretation::satisfies(const Axiom& axiom) const {
  auto role_pairs = [&](Iri r) {
    auto it = roles.find(r);
    return it == roles.end() ? std::set<std::pair<int, int>>{} : it->second;
  };
  switch (axiom.kind()) {
    case AxiomKind::SubClassOf: {
      const auto& a = axiom.as<SubClassOf>();
      std::set<int> sub = eval(a.sub), sup = eval(a.sup);
      return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
    }
    case AxiomKind::EquivalentClasses: {
      const auto& cs = axiom.as<EquivalentClasses>().classes;
      std::set<int> first = eval(cs.front());
      for (auto c : cs)
        if (eval(c) != first) return false;
      return true;
    }
    case AxiomKind::DisjointClasses: {
      const auto& cs = axiom.as<DisjointClasses>().classes;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        std::set<int> a = eval(cs[i]);
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          for (int x : eval(cs[j]))
            if (a.count(x)) return false;
        }
      }
      return true;
    }
    case AxiomKind::SubRoleOf: {
      const auto& a = axiom.as<SubRoleOf>();
      auto sub = role_pairs(a.sub), sup = role_pairs(a.sup);
      return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
    }
    case AxiomKind::TransitiveRole: {
      auto rel = role_pairs(axiom.as<TransitiveRole>().role);
      for (auto [x, y] : rel)
        for (auto [y2, z] : rel)
          if (y2 == y && !rel.count({x, z})) return false;
      return true;
    }
    case AxiomKind::RoleDomain: {
      const auto& a = axiom.as<RoleDomain>();
      std::set<int> d = eval(a.concept_expr);
      for (auto [x, y] : role_pairs(a.role)) {
        (void)y;
        if (!d.count(x)) return false;
      }
      return true;
    }
    case AxiomKind::RoleRange: {
      const auto& a = axiom.as<RoleRange>();
      std::set<int> r = eval(a.concept_expr);
      for (auto [x, y] : role_pairs(a.role)) {
        (void)x;
        if (!r.count(y)) return false;
      }
      return true;
    }
  }
  return false;
}

bool Interpretation::models(const Ontology& ontology) const {
  for (const auto& axiom : ontology.axioms())
    if (!satisfies(axiom)) return false;
  return true;
}

bool Interpretation::countermodel_for(const Ontology& ontology,
                                      const Axiom& axiom) const {
  return models(ontology) && !satisfies(axiom);
}

CountermodelSearch find_countermodel(const Ontology& ontology,
                                     const Axiom& axiom, int max_domain,
                                     long long budget) {
  Signature sig = signature_of(ontology);
  axiom.signature_into(sig);
  std::vector<Iri> concepts(sig.concepts.begin(), sig.concepts.end());
  std::vector<Iri> roles(sig.roles.begin(), sig.roles.end());

  CountermodelSearch result;
  result.exhausted = true;
  long long tried = 0;

  for (int k = 1; k <= max_domain; ++k) {
    const int cbits = static_cast<int>(concepts.size()) * k;
    const int rbits = static_cast<int>(roles.size()) * k * k;
    if (cbits + rbits > 62) {
      result.exhausted = false;
      continue;
    }
    const unsigned long long total = 1ull << (cbits + rbits);
    for (unsigned long long word = 0; word < total; ++word) {
      if (++tried > budget) {
        result.exhausted = false;
        return result;
      }
      Interpretation interp;
      interp.domain = k;
      unsigned long long bits = word;
      for (auto c : concepts) {
        std::set<int> ext;
        for (int e = 0; e < k; ++e) {
          if (bits & 1ull) ext.insert(e);
          bits >>= 1;
        }
        if (!ext.empty()) interp.concepts.emplace(c, std::move(ext));
      }
      for (auto r : roles) {
        std::set<std::pair<int, int>> rel;
        for (int x = 0; x < k; ++x) {
          for (int y = 0; y < k; ++y) {
            if (bits & 1ull) rel.insert({x, y});
            bits >>= 1;
          }
        }
        if (!rel.empty()) interp.roles.emplace(r, std::move(rel));
      }
      if (interp.countermodel_for(ontology, axiom)) {
        result.model = std::move(interp);
        return result;
      }
    }
  }
  return result;
}

}  // namespace onto::testing
