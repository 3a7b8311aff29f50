#include "support/el_saturation.hpp"

#include <stdexcept>

#include "onto/signature.hpp"

namespace onto::testing {
namespace {

bool concept_in_el(Concept c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atomic:
      return true;
    case ConceptKind::Not:
    case ConceptKind::Or:
    case ConceptKind::Forall:
      return false;
    case ConceptKind::And: {
      for (auto m : c.members())
        if (!concept_in_el(m)) return false;
      return true;
    }
    case ConceptKind::Exists:
      return concept_in_el(c.child());
  }
  return false;
}

bool atomic_ish(Concept c) {
  return c.kind() == ConceptKind::Top || c.kind() == ConceptKind::Bottom ||
         c.kind() == ConceptKind::Atomic;
}

}  // namespace

bool in_el_fragment(const Ontology& ontology) {
  for (const auto& axiom : ontology.axioms()) {
    switch (axiom.kind()) {
      case AxiomKind::SubClassOf: {
        const auto& a = axiom.as<SubClassOf>();
        if (!concept_in_el(a.sub) || !concept_in_el(a.sup)) return false;
        break;
      }
      case AxiomKind::EquivalentClasses:
        for (auto c : axiom.as<EquivalentClasses>().classes)
          if (!concept_in_el(c)) return false;
        break;
      case AxiomKind::DisjointClasses:
        for (auto c : axiom.as<DisjointClasses>().classes)
          if (!concept_in_el(c)) return false;
        break;
      case AxiomKind::RoleDomain:
        if (!concept_in_el(axiom.as<RoleDomain>().concept_expr)) return false;
        break;
      case AxiomKind::RoleRange:
        if (!concept_in_el(axiom.as<RoleRange>().concept_expr)) return false;
        break;
      default:
        break;
    }
  }
  return true;
}

ElOracle::AtomId ElOracle::atom(Iri iri) {
  auto it = atom_ids_.find(iri);
  if (it != atom_ids_.end()) return it->second;
  AtomId id = next_atom_++;
  atom_ids_.emplace(iri, id);
  return id;
}

ElOracle::AtomId ElOracle::fresh() { return next_atom_++; }

ElOracle::AtomId ElOracle::atom_of(Concept c) {
  switch (c.kind()) {
    case ConceptKind::Top: return kTop;
    case ConceptKind::Bottom: return kBot;
    case ConceptKind::Atomic: return atom(c.iri());
    default:
      throw std::logic_error("atom_of: not an atomic-ish concept");
  }
}

int ElOracle::role_id(Iri iri) {
  auto it = role_ids_.find(iri);
  if (it != role_ids_.end()) return it->second;
  int id = static_cast<int>(role_ids_.size());
  role_ids_.emplace(iri, id);
  return id;
}

// Stores "sub <= d" with d already an atom (NF rules toward the left).
void ElOracle::norm_to_atom(Concept sub, AtomId d) {
  switch (sub.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atomic:
      sub1_.push_back({atom_of(sub), d});
      return;
    case ConceptKind::And: {
      std::vector<AtomId> parts;
      for (auto m : sub.members()) {
        if (atomic_ish(m)) {
          parts.push_back(atom_of(m));
        } else {
          AtomId n = fresh();
          norm_to_atom(m, n);
          parts.push_back(n);
        }
      }
      AtomId cur = parts[0];
      for (std::size_t i = 1; i < parts.size(); ++i) {
        AtomId target = (i + 1 == parts.size()) ? d : fresh();
        conj_.push_back({cur, parts[i], target});
        cur = target;
      }
      return;
    }
    case ConceptKind::Exists: {
      Concept f = sub.child();
      AtomId fa;
      if (atomic_ish(f)) {
        fa = atom_of(f);
      } else {
        fa = fresh();
        norm_to_atom(f, fa);
      }
      ex_lhs_.push_back({role_id(sub.role()), fa, d});
      return;
    }
    default:
      throw std::logic_error("norm_to_atom: outside EL");
  }
}

// Stores "b <= sup" with b already an atom (NF rules toward the right).
void ElOracle::norm_from_atom(AtomId b, Concept sup) {
  switch (sup.kind()) {
    case ConceptKind::Top:
      return;
    case ConceptKind::Bottom:
      sub1_.push_back({b, kBot});
      return;
    case ConceptKind::Atomic:
      sub1_.push_back({b, atom_of(sup)});
      return;
    case ConceptKind::And:
      for (auto m : sup.members()) norm_from_atom(b, m);
      return;
    case ConceptKind::Exists: {
      Concept f = sup.child();
      AtomId fa;
      if (atomic_ish(f)) {
        fa = atom_of(f);
      } else {
        fa = fresh();
        norm_from_atom(fa, f);
      }
      ex_rhs_.push_back({b, role_id(sup.role()), fa});
      return;
    }
    default:
      throw std::logic_error("norm_from_atom: outside EL");
  }
}

void ElOracle::normalize(Concept sub, Concept sup) {
  if (atomic_ish(sub)) {
    norm_from_atom(atom_of(sub), sup);
  } else if (atomic_ish(sup)) {
    norm_to_atom(sub, atom_of(sup));
  } else {
    AtomId mid = fresh();
    norm_to_atom(sub, mid);
    norm_from_atom(mid, sup);
  }
}

ElOracle::ElOracle(const Ontology& ontology) {
  if (!in_el_fragment(ontology))
    throw std::invalid_argument("ElOracle: ontology outside the EL fragment");

  Signature sig = signature_of(ontology);
  for (auto r : sig.roles) role_id(r);
  std::vector<std::vector<int>> direct(role_ids_.size());
  for (const auto& axiom : ontology.axioms()) {
    if (axiom.kind() == AxiomKind::SubRoleOf) {
      const auto& a = axiom.as<SubRoleOf>();
      direct[role_id(a.sub)].push_back(role_id(a.sup));
    } else if (axiom.kind() == AxiomKind::TransitiveRole) {
      transitive_.insert(role_id(axiom.as<TransitiveRole>().role));
    }
  }
  role_supers_.assign(role_ids_.size(), {});
  for (std::size_t r = 0; r < role_ids_.size(); ++r) {
    std::set<int> seen{static_cast<int>(r)};
    std::vector<int> stack{static_cast<int>(r)};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int s : direct[cur])
        if (seen.insert(s).second) stack.push_back(s);
    }
    role_supers_[r].assign(seen.begin(), seen.end());
  }

  for (auto c : sig.concepts) atom(c);

  for (const auto& axiom : ontology.axioms()) {
    switch (axiom.kind()) {
      case AxiomKind::SubRoleOf:
      case AxiomKind::TransitiveRole:
        break;
      case AxiomKind::RoleDomain: {
        const auto& a = axiom.as<RoleDomain>();
        AtomId n = fresh();
        dom_[role_id(a.role)].push_back(n);
        norm_from_atom(n, a.concept_expr);
        break;
      }
      case AxiomKind::RoleRange: {
        const auto& a = axiom.as<RoleRange>();
        AtomId n = fresh();
        ran_[role_id(a.role)].push_back(n);
        norm_from_atom(n, a.concept_expr);
        break;
      }
      default:
        for (const auto& gci : axiom.normalized()) {
          const auto& sc = gci.as<SubClassOf>();
          normalize(sc.sub, sc.sup);
        }
        break;
    }
  }

  saturate();
}

int ElOracle::ctx_of(AtomId root, int via_role) {
  auto key = std::make_pair(root, via_role);
  auto it = ctx_index_.find(key);
  if (it != ctx_index_.end()) return it->second;
  int id = static_cast<int>(ctxs_.size());
  ctxs_.push_back({root, via_role});
  ctx_index_.emplace(key, id);
  s_.push_back({root, kTop});
  return id;
}

void ElOracle::saturate() {
  edges_.assign(role_ids_.size(), {});

  // root contexts for the queryable atoms
  ctx_of(kTop, -1);
  for (const auto& [iri, a] : atom_ids_) {
    (void)iri;
    ctx_of(a, -1);
  }

  bool changed = true;
  auto add_s = [&](int x, AtomId a) {
    if (s_[x].insert(a).second) changed = true;
  };
  auto add_edge_closed = [&](int role, int x, int y) {
    for (int s : role_supers_[role]) {
      if (edges_[s].insert({x, y}).second) changed = true;
    }
  };

  while (changed) {
    changed = false;

    for (const auto& [b, c] : sub1_) {
      for (std::size_t x = 0; x < ctxs_.size(); ++x)
        if (s_[x].count(b)) add_s(static_cast<int>(x), c);
    }
    for (const auto& [b1, b2, c] : conj_) {
      for (std::size_t x = 0; x < ctxs_.size(); ++x)
        if (s_[x].count(b1) && s_[x].count(b2)) add_s(static_cast<int>(x), c);
    }
    for (const auto& [b, r, c] : ex_rhs_) {
      for (std::size_t x = 0; x < ctxs_.size(); ++x) {
        if (!s_[x].count(b)) continue;
        int y = ctx_of(c, r);
        add_edge_closed(r, static_cast<int>(x), y);
      }
    }
    // transitivity: compose within each transitive role
    for (int t : transitive_) {
      auto snapshot = edges_[t];
      for (const auto& [x, y] : snapshot) {
        for (const auto& [y2, z] : snapshot) {
          if (y2 != y) continue;
          add_edge_closed(t, x, z);
        }
      }
    }
    for (const auto& [r, b, c] : ex_lhs_) {
      for (const auto& [x, y] : edges_[r]) {
        if (s_[y].count(b)) add_s(x, c);
      }
    }
    // domain/range on every (derived) edge; bottom propagates backwards
    for (std::size_t r = 0; r < edges_.size(); ++r) {
      auto dit = dom_.find(static_cast<int>(r));
      auto rit = ran_.find(static_cast<int>(r));
      for (const auto& [x, y] : edges_[r]) {
        if (dit != dom_.end())
          for (AtomId a : dit->second) add_s(x, a);
        if (rit != ran_.end())
          for (AtomId a : rit->second) add_s(y, a);
        if (s_[y].count(kBot)) add_s(x, kBot);
      }
    }
  }
}

bool ElOracle::subsumed(Concept ca, Concept cb) const {
  AtomId a, b;
  switch (ca.kind()) {
    case ConceptKind::Top: a = kTop; break;
    case ConceptKind::Bottom: return true;
    case ConceptKind::Atomic: {
      auto it = atom_ids_.find(ca.iri());
      if (it == atom_ids_.end()) {
        // unknown concept: only subsumed by Thing (or under inconsistency)
        a = -1;
      } else {
        a = it->second;
      }
      break;
    }
    default:
      throw std::invalid_argument("ElOracle::subsumed expects atoms");
  }
  switch (cb.kind()) {
    case ConceptKind::Top: return true;
    case ConceptKind::Bottom: b = kBot; break;
    case ConceptKind::Atomic: {
      auto it = atom_ids_.find(cb.iri());
      if (it == atom_ids_.end()) b = -1;
      else b = it->second;
      break;
    }
    default:
      throw std::invalid_argument("ElOracle::subsumed expects atoms");
  }

  auto top_it = ctx_index_.find({kTop, -1});
  bool inconsistent =
      top_it != ctx_index_.end() && s_[top_it->second].count(kBot) != 0;
  if (inconsistent) return true;
  if (a == -1) return false;  // fresh satisfiable concept
  auto it = ctx_index_.find({a, -1});
  if (it == ctx_index_.end()) return false;
  const auto& s = s_[it->second];
  if (s.count(kBot)) return true;  // unsatisfiable lhs
  if (b == -1) return false;
  return s.count(b) != 0;
}

}  // namespace onto::testing
