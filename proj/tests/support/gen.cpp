#include "support/gen.hpp"

#include <string>
#include <vector>

namespace onto::testing {
namespace {

Iri concept_iri(int i) { return Iri::of("C" + std::to_string(i)); }
Iri role_iri(int i) { return Iri::of("r" + std::to_string(i)); }

int pick(Rng& rng, int n) {
  return static_cast<int>(rng() % static_cast<unsigned>(n));
}

Concept random_el_concept(Rng& rng, int n_concepts, int n_roles, int depth,
                          bool allow_bottom) {
  int roll = pick(rng, 100);
  if (depth == 0 || roll < 50) {
    if (allow_bottom && roll < 4) return Concept::bottom();
    if (roll >= 45 && roll < 50) return Concept::top();
    return Concept::atomic(concept_iri(pick(rng, n_concepts)));
  }
  if (roll < 75 || n_roles == 0) {
    std::vector<Concept> ms;
    int k = 2 + pick(rng, 2);
    for (int i = 0; i < k; ++i)
      ms.push_back(
          random_el_concept(rng, n_concepts, n_roles, depth - 1, allow_bottom));
    return Concept::intersection(std::move(ms));
  }
  return Concept::some(
      role_iri(pick(rng, n_roles)),
      random_el_concept(rng, n_concepts, n_roles, depth - 1, allow_bottom));
}

Concept random_alch_concept(Rng& rng, int n_concepts, int n_roles, int depth) {
  int roll = pick(rng, 100);
  if (depth == 0 || roll < 40) {
    if (roll < 3) return Concept::bottom();
    if (roll < 6) return Concept::top();
    return Concept::atomic(concept_iri(pick(rng, n_concepts)));
  }
  if (roll < 55) {
    std::vector<Concept> ms;
    int k = 2 + pick(rng, 2);
    for (int i = 0; i < k; ++i)
      ms.push_back(random_alch_concept(rng, n_concepts, n_roles, depth - 1));
    return Concept::intersection(std::move(ms));
  }
  if (roll < 70) {
    std::vector<Concept> ms;
    int k = 2 + pick(rng, 2);
    for (int i = 0; i < k; ++i)
      ms.push_back(random_alch_concept(rng, n_concepts, n_roles, depth - 1));
    return Concept::union_of(std::move(ms));
  }
  if (roll < 80)
    return Concept::negation(
        random_alch_concept(rng, n_concepts, n_roles, depth - 1));
  if (n_roles == 0)
    return Concept::atomic(concept_iri(pick(rng, n_concepts)));
  Concept filler = random_alch_concept(rng, n_concepts, n_roles, depth - 1);
  return roll < 90 ? Concept::some(role_iri(pick(rng, n_roles)), filler)
                   : Concept::only(role_iri(pick(rng, n_roles)), filler);
}

}  // namespace

Ontology random_el_ontology(Rng& rng, int n_concepts, int n_roles,
                            int n_axioms) {
  Ontology onto(Iri::of("gen-el"));
  for (int i = 0; i < n_axioms; ++i) {
    int roll = pick(rng, 100);
    if (n_roles > 0 && roll < 8) {
      onto.add(SubRoleOf{role_iri(pick(rng, n_roles)),
                         role_iri(pick(rng, n_roles))});
    } else if (n_roles > 0 && roll < 13) {
      onto.add(TransitiveRole{role_iri(pick(rng, n_roles))});
    } else if (n_roles > 0 && roll < 22) {
      onto.add(RoleDomain{role_iri(pick(rng, n_roles)),
                          random_el_concept(rng, n_concepts, n_roles, 1, false)});
    } else if (n_roles > 0 && roll < 31) {
      onto.add(RoleRange{role_iri(pick(rng, n_roles)),
                         random_el_concept(rng, n_concepts, n_roles, 1, false)});
    } else {
      Concept sub = random_el_concept(rng, n_concepts, n_roles, 2, false);
      Concept sup = random_el_concept(rng, n_concepts, n_roles, 2, true);
      onto.add(SubClassOf{sub, sup});
    }
  }
  return onto;
}

Ontology random_alch_ontology(Rng& rng, int n_concepts, int n_roles,
                              int n_axioms) {
  Ontology onto(Iri::of("gen-alch"));
  for (int i = 0; i < n_axioms; ++i) {
    int roll = pick(rng, 100);
    if (n_roles > 0 && roll < 6) {
      onto.add(SubRoleOf{role_iri(pick(rng, n_roles)),
                         role_iri(pick(rng, n_roles))});
    } else if (n_roles > 0 && roll < 10) {
      onto.add(TransitiveRole{role_iri(pick(rng, n_roles))});
    } else if (n_roles > 0 && roll < 16) {
      onto.add(RoleDomain{role_iri(pick(rng, n_roles)),
                          random_alch_concept(rng, n_concepts, n_roles, 1)});
    } else if (n_roles > 0 && roll < 22) {
      onto.add(RoleRange{role_iri(pick(rng, n_roles)),
                         random_alch_concept(rng, n_concepts, n_roles, 1)});
    } else if (roll < 32) {
      onto.add(EquivalentClasses{
          {Concept::atomic(concept_iri(pick(rng, n_concepts))),
           random_alch_concept(rng, n_concepts, n_roles, 2)}});
    } else if (roll < 40) {
      onto.add(DisjointClasses{
          {Concept::atomic(concept_iri(pick(rng, n_concepts))),
           Concept::atomic(concept_iri(pick(rng, n_concepts)))}});
    } else {
      onto.add(SubClassOf{random_alch_concept(rng, n_concepts, n_roles, 2),
                          random_alch_concept(rng, n_concepts, n_roles, 2)});
    }
  }
  for (int i = 0; i < n_concepts; i += 2)
    onto.set_label(concept_iri(i), "concept " + std::to_string(i));
  return onto;
}

Signature random_seed(Rng& rng, const Ontology& ontology,
                      std::size_t max_concepts, std::size_t max_roles) {
  Signature sig = signature_of(ontology);
  std::vector<Iri> cs(sig.concepts.begin(), sig.concepts.end());
  std::vector<Iri> rs(sig.roles.begin(), sig.roles.end());
  Signature seed;
  if (!cs.empty()) {
    std::size_t n = 1 + rng() % std::min(max_concepts, cs.size());
    for (std::size_t i = 0; i < n; ++i)
      seed.concepts.insert(cs[rng() % cs.size()]);
  }
  if (!rs.empty() && max_roles > 0) {
    std::size_t n = rng() % (std::min(max_roles, rs.size()) + 1);
    for (std::size_t i = 0; i < n; ++i)
      seed.roles.insert(rs[rng() % rs.size()]);
  }
  return seed;
}

Ontology synthetic_taxonomy(int n_concepts, int n_links, int n_roles,
                            unsigned seed) {
  Rng rng(seed);
  Ontology onto(Iri::of("synthetic-benchmark"));
  for (int i = 1; i < n_concepts; ++i) {
    int parent = pick(rng, i);
    onto.add(SubClassOf{Concept::atomic(concept_iri(i)),
                        Concept::atomic(concept_iri(parent))});
  }
  for (int i = 0; i < n_links; ++i) {
    int a = pick(rng, n_concepts);
    int b = pick(rng, n_concepts);
    int r = pick(rng, n_roles);
    onto.add(SubClassOf{Concept::atomic(concept_iri(a)),
                        Concept::some(role_iri(r), Concept::atomic(concept_iri(b)))});
  }
  if (n_roles > 1) {
    onto.add(SubRoleOf{role_iri(1), role_iri(0)});
    onto.add(TransitiveRole{role_iri(0)});
  }
  return onto;
}

}  // namespace onto::testing
