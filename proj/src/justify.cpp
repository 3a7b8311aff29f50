#include "onto/justify.hpp"

#include <algorithm>
#include <set>

#include "onto/errors.hpp"
#include "onto/reasoner.hpp"
#include "onto/signature.hpp"

namespace onto {
namespace {

bool subset_entails(const Ontology& base, const std::vector<std::size_t>& idxs,
                    const Axiom& target) {
  Ontology sub(base.id());
  for (auto i : idxs) sub.add(base.axioms()[i]);
  return Reasoner(sub).entails(target);
}

// Indices of axioms sharing signature with `sig`.
std::vector<std::size_t> connected_wave(const Ontology& onto,
                                        const Signature& sig,
                                        const std::vector<char>& taken) {
  std::vector<std::size_t> wave;
  for (std::size_t i = 0; i < onto.axioms().size(); ++i) {
    if (taken[i]) continue;
    Signature asig;
    onto.axioms()[i].signature_into(asig);
    bool touches = false;
    for (auto c : asig.concepts)
      if (sig.contains_concept(c)) {
        touches = true;
        break;
      }
    if (!touches) {
      for (auto r : asig.roles)
        if (sig.contains_role(r)) {
          touches = true;
          break;
        }
    }
    if (touches) wave.push_back(i);
  }
  return wave;
}

// One minimal justification drawn from the axioms at `pool` indices.
// Returns empty when the pool does not entail the target.
std::vector<std::size_t> find_one(const Ontology& onto,
                                  const std::vector<std::size_t>& pool,
                                  const Axiom& target) {
  if (!subset_entails(onto, pool, target)) return {};

  // Expansion: grow a signature-connected core first; fall back to the
  // whole pool (covers entailments via global inconsistency).
  std::vector<char> taken(onto.axioms().size(), 1);
  for (auto i : pool) taken[i] = 0;
  Signature sig;
  target.signature_into(sig);
  std::vector<std::size_t> core;
  while (true) {
    auto wave = connected_wave(onto, sig, taken);
    if (wave.empty()) break;
    for (auto i : wave) {
      taken[i] = 1;
      core.push_back(i);
      onto.axioms()[i].signature_into(sig);
    }
    if (subset_entails(onto, core, target)) break;
  }
  if (!subset_entails(onto, core, target)) core = pool;

  // Contraction: deletion-based minimization in reverse document order.
  std::sort(core.begin(), core.end());
  for (std::size_t k = core.size(); k-- > 0;) {
    std::vector<std::size_t> without;
    without.reserve(core.size() - 1);
    for (std::size_t j = 0; j < core.size(); ++j)
      if (j != k) without.push_back(core[j]);
    if (subset_entails(onto, without, target)) core = std::move(without);
  }
  return core;
}

Justification materialize(const Ontology& onto,
                          const std::vector<std::size_t>& idxs,
                          const Axiom& target) {
  std::vector<std::size_t> sorted = idxs;
  std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
    return Axiom::compare(onto.axioms()[a], onto.axioms()[b]) < 0;
  });
  Justification j{target, {}, {}};
  for (auto i : sorted) {
    j.axioms.push_back(onto.axioms()[i]);
    j.sources.push_back(onto.source(i));
  }
  return j;
}

}  // namespace

int Justification::compare(const Justification& a, const Justification& b) {
  if (a.axioms.size() != b.axioms.size())
    return a.axioms.size() < b.axioms.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.axioms.size(); ++i) {
    int r = Axiom::compare(a.axioms[i], b.axioms[i]);
    if (r != 0) return r;
  }
  return 0;
}

JustifyResult justify(const Ontology& ontology, const Axiom& target,
                      int max_count, int node_budget) {
  if (max_count < 1) throw PreconditionError("justify: max_count must be >= 1");
  if (!Reasoner(ontology).entails(target))
    throw PreconditionError("justify: target axiom is not entailed");

  const std::size_t n = ontology.axioms().size();
  std::vector<std::size_t> everything(n);
  for (std::size_t i = 0; i < n; ++i) everything[i] = i;

  std::set<std::vector<std::size_t>> found;  // sorted index sets
  JustifyResult result;

  // Reiter-style hitting-set tree over removal sets, depth-first.
  std::vector<std::vector<std::size_t>> stack{{}};  // removal paths
  std::set<std::vector<std::size_t>> seen_paths;
  int nodes = 0;
  while (!stack.empty()) {
    if (static_cast<int>(found.size()) >= max_count) {
      result.complete = false;
      break;
    }
    if (++nodes > node_budget) {
      result.complete = false;
      break;
    }
    std::vector<std::size_t> removed = std::move(stack.back());
    stack.pop_back();

    std::vector<std::size_t> pool;
    pool.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::binary_search(removed.begin(), removed.end(), i))
        pool.push_back(i);
    }

    // Reuse a known justification untouched by this removal set.
    const std::vector<std::size_t>* reuse = nullptr;
    for (const auto& j : found) {
      bool disjoint = true;
      for (auto i : j)
        if (std::binary_search(removed.begin(), removed.end(), i)) {
          disjoint = false;
          break;
        }
      if (disjoint) {
        reuse = &j;
        break;
      }
    }

    std::vector<std::size_t> just;
    if (reuse != nullptr) {
      just = *reuse;
    } else {
      just = find_one(ontology, pool, target);
      if (just.empty()) continue;  // this branch lost the entailment
      std::sort(just.begin(), just.end());
      found.insert(just);
    }

    for (auto i : just) {
      std::vector<std::size_t> child = removed;
      child.insert(std::lower_bound(child.begin(), child.end(), i), i);
      if (seen_paths.insert(child).second) stack.push_back(std::move(child));
    }
  }

  for (const auto& j : found)
    result.justifications.push_back(materialize(ontology, j, target));
  std::sort(result.justifications.begin(), result.justifications.end(),
            [](const Justification& a, const Justification& b) {
              return Justification::compare(a, b) < 0;
            });
  return result;
}

namespace {

std::string term(Iri iri, const std::map<Iri, std::string>& labels,
                 RenderMode mode) {
  if (mode == RenderMode::Names) {
    auto it = labels.find(iri);
    if (it != labels.end()) return it->second;
  }
  return iri.canonical();
}

std::string concept_text(Concept c, const std::map<Iri, std::string>& labels,
                         RenderMode mode) {
  switch (c.kind()) {
    case ConceptKind::Top: return "owl:Thing";
    case ConceptKind::Bottom: return "owl:Nothing";
    case ConceptKind::Atomic: return term(c.iri(), labels, mode);
    case ConceptKind::Not:
      return "not (" + concept_text(c.child(), labels, mode) + ")";
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::string sep = c.kind() == ConceptKind::And ? " and " : " or ";
      std::string out;
      bool first = true;
      for (auto m : c.members()) {
        if (!first) out += sep;
        first = false;
        bool wrap = m.kind() == ConceptKind::And || m.kind() == ConceptKind::Or;
        out += wrap ? "(" + concept_text(m, labels, mode) + ")"
                    : concept_text(m, labels, mode);
      }
      return out;
    }
    case ConceptKind::Exists:
      return term(c.role(), labels, mode) + " some (" +
             concept_text(c.child(), labels, mode) + ")";
    case ConceptKind::Forall:
      return term(c.role(), labels, mode) + " only (" +
             concept_text(c.child(), labels, mode) + ")";
  }
  return {};
}

}  // namespace

std::string render_axiom(const Axiom& axiom,
                         const std::map<Iri, std::string>& labels,
                         RenderMode mode) {
  auto ct = [&](Concept c) {
    bool wrap = c.kind() == ConceptKind::And || c.kind() == ConceptKind::Or;
    return wrap ? "(" + concept_text(c, labels, mode) + ")"
                : concept_text(c, labels, mode);
  };
  switch (axiom.kind()) {
    case AxiomKind::SubClassOf: {
      const auto& a = axiom.as<SubClassOf>();
      return ct(a.sub) + " SubClassOf " + ct(a.sup);
    }
    case AxiomKind::EquivalentClasses: {
      const auto& cs = axiom.as<EquivalentClasses>().classes;
      std::string out;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += " EquivalentTo ";
        out += ct(cs[i]);
      }
      return out;
    }
    case AxiomKind::DisjointClasses: {
      const auto& cs = axiom.as<DisjointClasses>().classes;
      std::string out;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += " DisjointWith ";
        out += ct(cs[i]);
      }
      return out;
    }
    case AxiomKind::SubRoleOf: {
      const auto& a = axiom.as<SubRoleOf>();
      return term(a.sub, labels, mode) + " SubPropertyOf " +
             term(a.sup, labels, mode);
    }
    case AxiomKind::TransitiveRole:
      return "Transitive(" + term(axiom.as<TransitiveRole>().role, labels, mode) +
             ")";
    case AxiomKind::RoleDomain: {
      const auto& a = axiom.as<RoleDomain>();
      return term(a.role, labels, mode) + " Domain " + ct(a.concept_expr);
    }
    case AxiomKind::RoleRange: {
      const auto& a = axiom.as<RoleRange>();
      return term(a.role, labels, mode) + " Range " + ct(a.concept_expr);
    }
  }
  return {};
}

std::string render_explanation(const Justification& justification,
                               const std::map<Iri, std::string>& labels,
                               RenderMode mode) {
  std::string out = render_axiom(justification.entailed, labels, mode) + "\n";
  for (std::size_t i = 0; i < justification.axioms.size(); ++i) {
    out += "  " + std::to_string(i + 1) + ") " +
           render_axiom(justification.axioms[i], labels, mode);
    Iri src = justification.sources[i];
    if (src.valid()) out += "  [" + src.canonical() + "]";
    out += '\n';
  }
  return out;
}

}  // namespace onto
