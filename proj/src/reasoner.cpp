#include "onto/reasoner.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "onto/signature.hpp"

namespace onto {
namespace {

// ---------------------------------------------------------------------------
// Labels: sorted-by-id concept sets, the tableau's working currency.

using Label = std::vector<Concept>;

bool id_less(Concept a, Concept b) { return a.id() < b.id(); }

bool label_insert(Label& l, Concept c) {
  auto it = std::lower_bound(l.begin(), l.end(), c, id_less);
  if (it != l.end() && *it == c) return false;
  l.insert(it, c);
  return true;
}

bool label_contains(const Label& l, Concept c) {
  return std::binary_search(l.begin(), l.end(), c, id_less);
}

// a subset-of b
bool label_subset(const Label& a, const Label& b) {
  if (a.size() > b.size()) return false;
  std::size_t j = 0;
  for (auto c : a) {
    while (j < b.size() && b[j].id() < c.id()) ++j;
    if (j == b.size() || b[j] != c) return false;
  }
  return true;
}

struct LabelHash {
  std::size_t operator()(const Label& l) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto c : l) {
      h ^= c.id();
      h *= 1099511628211ull;
    }
    return h;
  }
};

// ---------------------------------------------------------------------------
// Preprocessed knowledge base.

struct RoleInfo {
  std::unordered_set<std::uint32_t> supers;  // iri ids, reflexive-transitive
  std::vector<Iri> trans_supers;             // effectively transitive supers
  bool transitive = false;                   // effective (via equivalent roles)
  std::vector<Concept> domains;              // effective, NNF
  std::vector<Concept> ranges;               // effective, NNF
};

struct KB {
  std::unordered_map<std::uint32_t, RoleInfo> roles;        // by role iri id
  std::unordered_map<std::uint32_t, std::vector<Concept>> unfold;  // atom iri id
  std::vector<Concept> universal;  // NNF disjunctions added to every node

  const RoleInfo* role(Iri r) const {
    auto it = roles.find(r.id());
    return it == roles.end() ? nullptr : &it->second;
  }

  bool sub_role(Iri r, Iri s) const {
    if (r == s) return true;
    const RoleInfo* info = role(r);
    return info && info->supers.count(s.id()) != 0;
  }
};

void add_unfold(KB& kb, Iri atom, Concept c) { kb.unfold[atom.id()].push_back(c); }

// Absorb one GCI (sub, sup); falls back to internalization.
void absorb_gci(KB& kb, std::map<std::uint32_t, std::vector<Concept>>& dom_raw,
                std::map<std::uint32_t, std::vector<Concept>>& ran_raw,
                Concept sub, Concept sup) {
  if (sub.kind() == ConceptKind::Bottom || sup.kind() == ConceptKind::Top) return;
  if (sub.kind() == ConceptKind::Atomic) {
    add_unfold(kb, sub.iri(), sup.nnf());
    return;
  }
  if (sub.kind() == ConceptKind::Top) {
    if (sup.kind() == ConceptKind::Forall) {
      ran_raw[sup.role().id()].push_back(sup.child().nnf());
      return;
    }
    kb.universal.push_back(sup.nnf());
    return;
  }
  if (sub.kind() == ConceptKind::Exists &&
      sub.child().kind() == ConceptKind::Top) {
    dom_raw[sub.role().id()].push_back(sup.nnf());
    return;
  }
  if (sub.kind() == ConceptKind::And) {
    // And(A, rest...) <= D becomes A <= D or not(rest...): still absorbable.
    for (auto m : sub.members()) {
      if (m.kind() != ConceptKind::Atomic) continue;
      std::vector<Concept> parts{sup.nnf()};
      for (auto other : sub.members()) {
        if (other == m) continue;
        parts.push_back(other.complement_nnf());
      }
      add_unfold(kb, m.iri(), Concept::union_of(std::move(parts)));
      return;
    }
  }
  kb.universal.push_back(
      Concept::union_of({sub.complement_nnf(), sup.nnf()}));
}

KB build_kb(const Ontology& onto) {
  KB kb;
  std::map<std::uint32_t, std::vector<Iri>> sub_edges;  // role -> direct supers
  std::set<std::uint32_t> declared_trans;
  std::map<std::uint32_t, std::vector<Concept>> dom_raw, ran_raw;

  Signature sig = signature_of(onto);
  for (auto r : sig.roles) kb.roles.emplace(r.id(), RoleInfo{});

  for (const auto& axiom : onto.axioms()) {
    switch (axiom.kind()) {
      case AxiomKind::SubRoleOf: {
        const auto& a = axiom.as<SubRoleOf>();
        sub_edges[a.sub.id()].push_back(a.sup);
        break;
      }
      case AxiomKind::TransitiveRole:
        declared_trans.insert(axiom.as<TransitiveRole>().role.id());
        break;
      case AxiomKind::RoleDomain: {
        const auto& a = axiom.as<RoleDomain>();
        dom_raw[a.role.id()].push_back(a.concept_expr.nnf());
        break;
      }
      case AxiomKind::RoleRange: {
        const auto& a = axiom.as<RoleRange>();
        ran_raw[a.role.id()].push_back(a.concept_expr.nnf());
        break;
      }
      default:
        for (const auto& gci : axiom.normalized()) {
          const auto& sc = gci.as<SubClassOf>();
          absorb_gci(kb, dom_raw, ran_raw, sc.sub, sc.sup);
        }
        break;
    }
  }

  // Reflexive-transitive role closure.
  for (auto& [rid, info] : kb.roles) {
    std::vector<std::uint32_t> stack{rid};
    info.supers.insert(rid);
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      auto it = sub_edges.find(cur);
      if (it == sub_edges.end()) continue;
      for (auto sup : it->second) {
        if (info.supers.insert(sup.id()).second) stack.push_back(sup.id());
      }
    }
  }
  // A role is effectively transitive when some equivalent role is declared
  // transitive.
  for (auto& [rid, info] : kb.roles) {
    for (auto sid : info.supers) {
      if (!declared_trans.count(sid)) continue;
      auto sit = kb.roles.find(sid);
      if (sid == rid || (sit != kb.roles.end() && sit->second.supers.count(rid))) {
        info.transitive = true;
        break;
      }
    }
  }
  for (auto& [rid, info] : kb.roles) {
    (void)rid;
    std::vector<Iri> ts;
    for (auto sid : info.supers) {
      auto sit = kb.roles.find(sid);
      if (sit != kb.roles.end() && sit->second.transitive) {
        // recover the Iri deterministically from any axiom occurrence
        for (auto r : sig.roles) {
          if (r.id() == sid) {
            ts.push_back(r);
            break;
          }
        }
      }
    }
    std::sort(ts.begin(), ts.end());
    info.trans_supers = std::move(ts);
  }
  // Effective domains/ranges: union over super-roles.
  for (auto& [rid, info] : kb.roles) {
    for (auto sid : info.supers) {
      if (auto it = dom_raw.find(sid); it != dom_raw.end())
        info.domains.insert(info.domains.end(), it->second.begin(),
                            it->second.end());
      if (auto it = ran_raw.find(sid); it != ran_raw.end())
        info.ranges.insert(info.ranges.end(), it->second.begin(),
                           it->second.end());
    }
  }
  return kb;
}

// ---------------------------------------------------------------------------
// Tableau.

class Tableau {
 public:
  Tableau(const KB& kb, std::unordered_map<Label, bool, LabelHash>& cache)
      : kb_(kb), cache_(cache) {}

  bool satisfiable(const std::vector<Concept>& roots) {
    Label label;
    for (auto c : roots) label_insert(label, c.nnf());
    for (auto u : kb_.universal) label_insert(label, u);
    std::vector<const Label*> ancestors;
    return expand(std::move(label), ancestors).sat;
  }

 private:
  static constexpr std::size_t kNoDep = static_cast<std::size_t>(-1);

  struct Outcome {
    bool sat;
    std::size_t dep;  // shallowest unresolved blocking ancestor, kNoDep if none
  };

  // Applies all non-branching rules; false on clash.
  bool saturate(Label& label) {
    std::vector<Concept> queue(label.begin(), label.end());
    std::size_t qi = 0;
    auto add = [&](Concept c) {
      if (label_insert(label, c)) queue.push_back(c);
    };
    while (qi < queue.size()) {
      Concept c = queue[qi++];
      switch (c.kind()) {
        case ConceptKind::Bottom:
          return false;
        case ConceptKind::Top:
          break;
        case ConceptKind::Atomic: {
          if (label_contains(label, Concept::negation(c))) return false;
          auto it = kb_.unfold.find(c.iri().id());
          if (it != kb_.unfold.end())
            for (auto d : it->second) add(d);
          break;
        }
        case ConceptKind::Not:
          if (label_contains(label, c.child())) return false;
          break;
        case ConceptKind::And:
          for (auto m : c.members()) add(m);
          break;
        case ConceptKind::Or:
          break;  // handled by branching
        case ConceptKind::Exists: {
          const RoleInfo* info = kb_.role(c.role());
          if (info)
            for (auto d : info->domains) add(d);
          break;
        }
        case ConceptKind::Forall:
          break;  // handled at successor creation
      }
    }
    return true;
  }

  Label successor_label(Concept ex, const Label& label) {
    Label succ;
    label_insert(succ, ex.child());
    const RoleInfo* info = kb_.role(ex.role());
    if (info)
      for (auto r : info->ranges) label_insert(succ, r);
    for (auto c : label) {
      if (c.kind() != ConceptKind::Forall) continue;
      if (kb_.sub_role(ex.role(), c.role())) label_insert(succ, c.child());
      if (info) {
        for (auto t : info->trans_supers) {
          if (kb_.sub_role(t, c.role()))
            label_insert(succ, Concept::only(t, c.child()));
        }
      }
    }
    for (auto u : kb_.universal) label_insert(succ, u);
    return succ;
  }

  Outcome expand(Label label, std::vector<const Label*>& ancestors) {
    if (!saturate(label)) return {false, kNoDep};

    if (auto it = cache_.find(label); it != cache_.end())
      return {it->second, kNoDep};

    for (std::size_t i = 0; i < ancestors.size(); ++i) {
      if (label_subset(label, *ancestors[i])) return {true, i};
    }

    // Deterministic branch choice: structurally smallest unsatisfied Or.
    Concept pick;
    bool has_or = false;
    for (auto c : label) {
      if (c.kind() != ConceptKind::Or) continue;
      bool satisfied = false;
      for (auto m : c.members()) {
        if (label_contains(label, m)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (!has_or || Concept::compare(c, pick) < 0) {
        pick = c;
        has_or = true;
      }
    }
    if (has_or) {
      for (auto m : pick.members()) {
        Label branch = label;
        label_insert(branch, m);
        Outcome r = expand(std::move(branch), ancestors);
        if (r.sat) {
          if (r.dep == kNoDep) cache_.emplace(std::move(label), true);
          return r;
        }
      }
      cache_.emplace(std::move(label), false);
      return {false, kNoDep};
    }

    // Fully expanded: spawn one successor per existential.
    const std::size_t here = ancestors.size();
    std::size_t dep = kNoDep;
    ancestors.push_back(&label);
    for (auto c : label) {
      if (c.kind() != ConceptKind::Exists) continue;
      Outcome r = expand(successor_label(c, label), ancestors);
      if (!r.sat) {
        ancestors.pop_back();
        cache_.emplace(std::move(label), false);
        return {false, kNoDep};
      }
      dep = std::min(dep, r.dep);
    }
    ancestors.pop_back();
    if (dep == here) dep = kNoDep;  // loops back to this node only
    if (dep == kNoDep) cache_.emplace(std::move(label), true);
    return {true, dep};
  }

  const KB& kb_;
  std::unordered_map<Label, bool, LabelHash>& cache_;
};

// Top-level atomic conjuncts of a right-hand side (told subsumers).
void top_level_atoms(Concept c, std::vector<Iri>& out) {
  if (c.kind() == ConceptKind::Atomic) {
    out.push_back(c.iri());
  } else if (c.kind() == ConceptKind::And) {
    for (auto m : c.members()) {
      if (m.kind() == ConceptKind::Atomic) out.push_back(m.iri());
    }
  }
}

bool rhs_el_primitive(Concept c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Atomic:
      return true;
    case ConceptKind::Bottom:
    case ConceptKind::Not:
    case ConceptKind::Or:
      return false;
    case ConceptKind::And: {
      for (auto m : c.members())
        if (!rhs_el_primitive(m)) return false;
      return true;
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      return rhs_el_primitive(c.child());
  }
  return false;
}

// Told reachability equals entailed atomic subsumption exactly when every
// concept axiom is a primitive definition A <= C with C free of Or/Not/
// Bottom and no axiom constrains Top, complex LHSs, or domains/ranges.
bool el_primitive(const Ontology& onto) {
  for (const auto& axiom : onto.axioms()) {
    switch (axiom.kind()) {
      case AxiomKind::SubClassOf: {
        const auto& a = axiom.as<SubClassOf>();
        if (a.sub.kind() != ConceptKind::Atomic) return false;
        if (!rhs_el_primitive(a.sup)) return false;
        break;
      }
      case AxiomKind::EquivalentClasses: {
        for (auto c : axiom.as<EquivalentClasses>().classes)
          if (c.kind() != ConceptKind::Atomic) return false;
        break;
      }
      case AxiomKind::SubRoleOf:
      case AxiomKind::TransitiveRole:
        break;
      default:
        return false;
    }
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Reasoner.

struct Reasoner::Impl {
  Ontology onto;
  ReasonerOptions opts;
  KB kb;
  mutable std::unordered_map<Label, bool, LabelHash> sat_cache;
  mutable std::unordered_map<std::uint64_t, bool> subs_cache;
  mutable std::optional<bool> consistent_memo;

  bool sat(const std::vector<Concept>& roots) const {
    Tableau t(kb, sat_cache);
    return t.satisfiable(roots);
  }

  bool subsumed(Concept sub, Concept sup) const {
    std::uint64_t key =
        (static_cast<std::uint64_t>(sub.id()) << 32) | sup.id();
    if (auto it = subs_cache.find(key); it != subs_cache.end())
      return it->second;
    bool result = !sat({sub, sup.complement_nnf()});
    subs_cache.emplace(key, result);
    return result;
  }

  bool entails(const Axiom& axiom) const;
  Taxonomy classify() const;
  Taxonomy classify_told() const;
  Taxonomy classify_general() const;
};

Reasoner::Reasoner(const Ontology& ontology, ReasonerOptions options)
    : impl_(std::make_shared<Impl>()) {
  impl_->onto = ontology;
  impl_->opts = options;
  impl_->kb = build_kb(ontology);
}

const Ontology& Reasoner::ontology() const { return impl_->onto; }

bool Reasoner::is_satisfiable(Concept c) const { return impl_->sat({c}); }

bool Reasoner::subsumes(Concept sub, Concept sup) const {
  return impl_->subsumed(sub, sup);
}

bool Reasoner::consistent() const {
  if (!impl_->consistent_memo)
    impl_->consistent_memo = impl_->sat({Concept::top()});
  return *impl_->consistent_memo;
}

bool Reasoner::Impl::entails(const Axiom& axiom) const {
  switch (axiom.kind()) {
    case AxiomKind::SubClassOf: {
      const auto& a = axiom.as<SubClassOf>();
      return subsumed(a.sub.nnf(), a.sup.nnf());
    }
    case AxiomKind::SubRoleOf: {
      const auto& a = axiom.as<SubRoleOf>();
      return kb.sub_role(a.sub, a.sup);
    }
    case AxiomKind::TransitiveRole: {
      const RoleInfo* info = kb.role(axiom.as<TransitiveRole>().role);
      return info != nullptr && info->transitive;
    }
    default: {
      for (const auto& gci : axiom.normalized()) {
        if (!entails(gci)) return false;
      }
      return true;
    }
  }
}

bool Reasoner::entails(const Axiom& axiom) const {
  return impl_->entails(axiom);
}

namespace {

// Shared taxonomy assembly: named nodes with direct parent edges, plus the
// distinguished top/bottom nodes.
Taxonomy assemble(std::vector<std::vector<Iri>> node_members,
                  const std::vector<std::set<std::size_t>>& parents,
                  std::vector<Iri> top_members, std::vector<Iri> bottom_members,
                  bool inconsistent) {
  std::vector<Taxonomy::Node> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  // order named nodes by canonical least member for stable output
  std::vector<std::size_t> order(node_members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (auto& m : node_members) std::sort(m.begin(), m.end());
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return node_members[a].front() < node_members[b].front();
  });

  Taxonomy::Node top;
  top.is_top = true;
  top.members = std::move(top_members);
  nodes.push_back(std::move(top));

  std::vector<std::size_t> remap(node_members.size());
  for (auto idx : order) {
    remap[idx] = nodes.size();
    Taxonomy::Node n;
    n.members = node_members[idx];
    nodes.push_back(std::move(n));
  }

  Taxonomy::Node bottom;
  bottom.is_bottom = true;
  bottom.members = std::move(bottom_members);
  nodes.push_back(std::move(bottom));
  const std::size_t top_idx = 0;
  const std::size_t bottom_idx = nodes.size() - 1;

  std::vector<char> has_child(node_members.size(), 0);
  for (std::size_t i = 0; i < node_members.size(); ++i) {
    if (parents[i].empty()) {
      edges.emplace_back(remap[i], top_idx);
    } else {
      for (auto p : parents[i]) {
        edges.emplace_back(remap[i], remap[p]);
        has_child[p] = 1;
      }
    }
  }
  bool any_leaf = false;
  for (std::size_t i = 0; i < node_members.size(); ++i) {
    if (!has_child[i]) {
      edges.emplace_back(bottom_idx, remap[i]);
      any_leaf = true;
    }
  }
  if (node_members.empty() || !any_leaf)
    edges.emplace_back(bottom_idx, top_idx);

  return Taxonomy(std::move(nodes), std::move(edges), inconsistent);
}

}  // namespace

Taxonomy Reasoner::Impl::classify_told() const {
  Signature sig = signature_of(onto);
  std::vector<Iri> atoms(sig.concepts.begin(), sig.concepts.end());
  std::unordered_map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < atoms.size(); ++i) index[atoms[i].id()] = i;

  std::vector<std::vector<std::size_t>> out(atoms.size());
  auto add_edge = [&](Iri from, Iri to) {
    if (from == to) return;
    out[index[from.id()]].push_back(index[to.id()]);
  };
  for (const auto& axiom : onto.axioms()) {
    if (axiom.kind() == AxiomKind::SubClassOf) {
      const auto& a = axiom.as<SubClassOf>();
      std::vector<Iri> tolds;
      top_level_atoms(a.sup, tolds);
      for (auto t : tolds) add_edge(a.sub.iri(), t);
    } else if (axiom.kind() == AxiomKind::EquivalentClasses) {
      const auto& cs = axiom.as<EquivalentClasses>().classes;
      for (auto x : cs)
        for (auto y : cs)
          if (x != y) add_edge(x.iri(), y.iri());
    }
  }

  // SCC condensation (iterative Tarjan).
  const std::size_t n = atoms.size();
  std::vector<int> comp(n, -1), low(n), num(n, -1);
  std::vector<std::size_t> scc_stack;
  std::vector<char> on_stack(n, 0);
  int counter = 0, ncomp = 0;
  struct Frame {
    std::size_t v;
    std::size_t ei;
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (num[s] != -1) continue;
    std::vector<Frame> frames{{s, 0}};
    num[s] = low[s] = counter++;
    scc_stack.push_back(s);
    on_stack[s] = 1;
    while (!frames.empty()) {
      auto& f = frames.back();
      if (f.ei < out[f.v].size()) {
        std::size_t w = out[f.v][f.ei++];
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          scc_stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        if (low[f.v] == num[f.v]) {
          while (true) {
            std::size_t w = scc_stack.back();
            scc_stack.pop_back();
            on_stack[w] = 0;
            comp[w] = ncomp;
            if (w == f.v) break;
          }
          ++ncomp;
        }
        std::size_t v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }

  std::vector<std::vector<Iri>> members(ncomp);
  for (std::size_t i = 0; i < n; ++i) members[comp[i]].push_back(atoms[i]);

  // Component DAG ancestor sets (bitsets), child -> parent direction.
  std::vector<std::set<std::size_t>> cout(ncomp);
  std::vector<std::size_t> indeg(ncomp, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto w : out[v]) {
      if (comp[v] != comp[w]) cout[comp[v]].insert(comp[w]);
    }
  }
  for (std::size_t c = 0; c < static_cast<std::size_t>(ncomp); ++c)
    for (auto p : cout[c]) ++indeg[p];

  // Topological order walking from children to parents is unnecessary; we
  // need parents-before-descendants for ancestor accumulation, i.e. process
  // a node after all nodes it points to (its parents).
  std::vector<std::size_t> order;
  {
    std::vector<std::size_t> outdeg(ncomp, 0);
    std::vector<std::vector<std::size_t>> rin(ncomp);
    for (std::size_t c = 0; c < static_cast<std::size_t>(ncomp); ++c) {
      outdeg[c] = cout[c].size();
      for (auto p : cout[c]) rin[p].push_back(c);
    }
    std::vector<std::size_t> ready;
    for (std::size_t c = 0; c < static_cast<std::size_t>(ncomp); ++c)
      if (outdeg[c] == 0) ready.push_back(c);
    while (!ready.empty()) {
      auto c = ready.back();
      ready.pop_back();
      order.push_back(c);
      for (auto child : rin[c]) {
        if (--outdeg[child] == 0) ready.push_back(child);
      }
    }
  }

  const std::size_t words = (ncomp + 63) / 64;
  std::vector<std::uint64_t> anc(static_cast<std::size_t>(ncomp) * words, 0);
  auto anc_test = [&](std::size_t c, std::size_t p) {
    return (anc[c * words + p / 64] >> (p % 64)) & 1u;
  };
  for (auto c : order) {
    for (auto p : cout[c]) {
      anc[c * words + p / 64] |= std::uint64_t(1) << (p % 64);
      for (std::size_t w = 0; w < words; ++w)
        anc[c * words + w] |= anc[p * words + w];
    }
  }

  // Direct parents: told parents not implied through another told parent.
  std::vector<std::set<std::size_t>> parents(ncomp);
  for (std::size_t c = 0; c < static_cast<std::size_t>(ncomp); ++c) {
    for (auto p : cout[c]) {
      bool redundant = false;
      for (auto q : cout[c]) {
        if (q != p && anc_test(q, p)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) parents[c].insert(p);
    }
  }

  return assemble(std::move(members), parents, {}, {}, false);
}

Taxonomy Reasoner::Impl::classify_general() const {
  Signature sig = signature_of(onto);
  std::vector<Iri> atoms(sig.concepts.begin(), sig.concepts.end());

  // Satisfiability screening; independent tests, optionally parallel.
  std::vector<char> satisfiable(atoms.size(), 1);
  int nthreads = std::max(1, opts.threads);
  if (nthreads > 1 && atoms.size() > 1) {
    std::vector<std::thread> pool;
    std::size_t chunk = (atoms.size() + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      std::size_t lo = t * chunk;
      std::size_t hi = std::min(atoms.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        std::unordered_map<Label, bool, LabelHash> local_cache;
        Tableau tab(kb, local_cache);
        for (std::size_t i = lo; i < hi; ++i)
          satisfiable[i] = tab.satisfiable({Concept::atomic(atoms[i])});
      });
    }
    for (auto& th : pool) th.join();
  } else {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      satisfiable[i] = sat({Concept::atomic(atoms[i])});
  }

  std::vector<Iri> bottom_members;
  std::vector<Iri> live;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (satisfiable[i])
      live.push_back(atoms[i]);
    else
      bottom_members.push_back(atoms[i]);
  }

  // Told subsumer units (mutual told edges are provably equivalent).
  std::map<Iri, std::set<Iri>> told;
  for (const auto& axiom : onto.axioms()) {
    auto note = [&](Concept sub, Concept sup) {
      if (sub.kind() != ConceptKind::Atomic) return;
      std::vector<Iri> tolds;
      top_level_atoms(sup, tolds);
      for (auto t : tolds)
        if (t != sub.iri()) told[sub.iri()].insert(t);
    };
    if (axiom.kind() == AxiomKind::SubClassOf) {
      const auto& a = axiom.as<SubClassOf>();
      note(a.sub, a.sup);
    } else if (axiom.kind() == AxiomKind::EquivalentClasses) {
      const auto& cs = axiom.as<EquivalentClasses>().classes;
      for (auto x : cs)
        for (auto y : cs)
          if (x != y) note(x, y);
    }
  }

  // Unit formation: strongly connected told components over live atoms.
  std::map<Iri, std::size_t> unit_of;
  std::vector<std::vector<Iri>> units;
  {
    std::set<Iri> live_set(live.begin(), live.end());
    std::map<Iri, std::vector<Iri>> adj;
    for (auto& [a, ts] : told) {
      if (!live_set.count(a)) continue;
      for (auto t : ts)
        if (live_set.count(t)) adj[a].push_back(t);
    }
    // Small-scale SCC via double reachability; atom counts here are modest.
    auto reach = [&](Iri from) {
      std::set<Iri> seen{from};
      std::vector<Iri> stack{from};
      while (!stack.empty()) {
        Iri v = stack.back();
        stack.pop_back();
        auto it = adj.find(v);
        if (it == adj.end()) continue;
        for (auto w : it->second)
          if (seen.insert(w).second) stack.push_back(w);
      }
      return seen;
    };
    std::map<Iri, std::set<Iri>> reach_memo;
    for (auto a : live) reach_memo[a] = reach(a);
    std::set<Iri> assigned;
    for (auto a : live) {
      if (assigned.count(a)) continue;
      std::vector<Iri> unit{a};
      for (auto b : reach_memo[a]) {
        if (b != a && reach_memo[b].count(a)) unit.push_back(b);
      }
      std::sort(unit.begin(), unit.end());
      for (auto m : unit) {
        assigned.insert(m);
        unit_of[m] = units.size();
      }
      units.push_back(std::move(unit));
    }
  }

  // Topological order of units, told parents first.
  std::vector<std::set<std::size_t>> unit_parents_told(units.size());
  for (auto& [a, ts] : told) {
    auto it = unit_of.find(a);
    if (it == unit_of.end()) continue;
    for (auto t : ts) {
      auto jt = unit_of.find(t);
      if (jt != unit_of.end() && jt->second != it->second)
        unit_parents_told[it->second].insert(jt->second);
    }
  }
  std::vector<std::size_t> order;
  {
    std::vector<int> state(units.size(), 0);
    // deterministic DFS by unit representative
    std::vector<std::size_t> by_rep(units.size());
    for (std::size_t i = 0; i < units.size(); ++i) by_rep[i] = i;
    std::sort(by_rep.begin(), by_rep.end(), [&](std::size_t a, std::size_t b) {
      return units[a].front() < units[b].front();
    });
    std::function<void(std::size_t)> visit = [&](std::size_t u) {
      if (state[u]) return;
      state[u] = 1;
      for (auto p : unit_parents_told[u]) visit(p);
      order.push_back(u);
    };
    for (auto u : by_rep) visit(u);
  }

  // Working DAG; node 0 is the (virtual) top node.
  std::vector<std::vector<Iri>> node_members{{}};
  std::vector<std::set<std::size_t>> parents{{}}, children{{}};
  std::vector<Iri> top_equivalent;
  std::map<Iri, std::size_t> node_of;  // named atom -> node (0 = top)

  auto subs_iri = [&](Iri a, Iri b) {
    return subsumed(Concept::atomic(a), Concept::atomic(b));
  };
  auto rep_of = [&](std::size_t n) { return node_members[n].front(); };

  auto ancestors_of = [&](std::size_t n) {
    std::set<std::size_t> seen{n};
    std::vector<std::size_t> stack{n};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto p : parents[v])
        if (seen.insert(p).second) stack.push_back(p);
    }
    return seen;
  };

  for (auto u : order) {
    const Iri rep = units[u].front();

    std::set<std::size_t> known{0};
    for (auto p : unit_parents_told[u]) {
      auto it = node_of.find(units[p].front());
      if (it != node_of.end()) {
        auto anc = ancestors_of(it->second);
        known.insert(anc.begin(), anc.end());
      }
    }

    // Top search: most specific nodes subsuming rep.
    std::map<std::size_t, bool> eval_memo;
    std::function<bool(std::size_t)> eval = [&](std::size_t n) {
      if (n == 0) return true;
      if (known.count(n)) return true;
      auto it = eval_memo.find(n);
      if (it != eval_memo.end()) return it->second;
      bool v = subs_iri(rep, rep_of(n));
      eval_memo.emplace(n, v);
      return v;
    };
    std::set<std::size_t> direct_parents;
    {
      std::set<std::size_t> visited;
      std::function<void(std::size_t)> dfs = [&](std::size_t n) {
        if (!visited.insert(n).second) return;
        bool any_child = false;
        for (auto c : children[n]) {
          if (eval(c)) {
            any_child = true;
            dfs(c);
          }
        }
        if (!any_child) direct_parents.insert(n);
      };
      dfs(0);
    }

    if (direct_parents == std::set<std::size_t>{0}) {
      // possibly equivalent to owl:Thing
      if (subsumed(Concept::top(), Concept::atomic(rep))) {
        for (auto m : units[u]) {
          top_equivalent.push_back(m);
          node_of[m] = 0;
        }
        node_members[0].insert(node_members[0].end(), units[u].begin(),
                               units[u].end());
        continue;
      }
    }

    // Equivalent to one of its direct parents?
    {
      std::optional<std::size_t> same;
      for (auto p : direct_parents) {
        if (p != 0 && subs_iri(rep_of(p), rep)) {
          same = p;
          break;
        }
      }
      if (same) {
        for (auto m : units[u]) node_of[m] = *same;
        node_members[*same].insert(node_members[*same].end(), units[u].begin(),
                                   units[u].end());
        std::sort(node_members[*same].begin(), node_members[*same].end());
        continue;
      }
    }

    // Bottom search: most general classified nodes subsumed by rep.
    std::set<std::size_t> hits;
    {
      std::set<std::size_t> visited;
      std::function<void(std::size_t)> dfs = [&](std::size_t n) {
        if (!visited.insert(n).second) return;
        if (n != 0 && subs_iri(rep_of(n), rep)) {
          hits.insert(n);
          return;
        }
        for (auto c : children[n]) dfs(c);
      };
      for (auto p : direct_parents)
        for (auto c : children[p]) dfs(c);
    }
    // keep only the most general hits
    {
      std::set<std::size_t> drop;
      for (auto h : hits) {
        auto anc = ancestors_of(h);
        for (auto h2 : hits) {
          if (h2 != h && anc.count(h2)) {
            drop.insert(h);
            break;
          }
        }
      }
      for (auto d : drop) hits.erase(d);
    }

    std::size_t idx = node_members.size();
    node_members.push_back(units[u]);
    parents.push_back({});
    children.push_back({});
    for (auto m : units[u]) node_of[m] = idx;
    for (auto p : direct_parents) {
      parents[idx].insert(p);
      children[p].insert(idx);
    }
    for (auto h : hits) {
      parents[h].insert(idx);
      children[idx].insert(h);
      for (auto p : direct_parents) {
        if (parents[h].erase(p)) children[p].erase(h);
      }
    }
  }

  // Strip the virtual top node; assemble() re-adds distinguished nodes.
  std::vector<std::vector<Iri>> out_members(node_members.begin() + 1,
                                            node_members.end());
  std::vector<std::set<std::size_t>> out_parents(out_members.size());
  for (std::size_t i = 1; i < node_members.size(); ++i) {
    for (auto p : parents[i])
      if (p != 0) out_parents[i - 1].insert(p - 1);
  }
  return assemble(std::move(out_members), out_parents,
                  std::move(top_equivalent), std::move(bottom_members), false);
}

Taxonomy Reasoner::Impl::classify() const {
  if (!onto.axioms().empty()) {
    std::unordered_map<Label, bool, LabelHash>& cache = sat_cache;
    Tableau t(kb, cache);
    if (!t.satisfiable({Concept::top()})) {
      // Inconsistent: every concept is both everything and nothing.
      Signature sig = signature_of(onto);
      Taxonomy::Node merged;
      merged.is_top = true;
      merged.is_bottom = true;
      merged.members.assign(sig.concepts.begin(), sig.concepts.end());
      return Taxonomy({std::move(merged)}, {}, true);
    }
  }
  if (!opts.force_general_classification && el_primitive(onto))
    return classify_told();
  return classify_general();
}

Taxonomy Reasoner::classify() const { return impl_->classify(); }

bool is_satisfiable(const Ontology& ontology, Concept c) {
  return Reasoner(ontology).is_satisfiable(c);
}

bool entails(const Ontology& ontology, const Axiom& axiom) {
  return Reasoner(ontology).entails(axiom);
}

Taxonomy classify(const Ontology& ontology, ReasonerOptions options) {
  return Reasoner(ontology, options).classify();
}

}  // namespace onto
