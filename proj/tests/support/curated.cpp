#include "support/curated.hpp"

#include "support/dsl.hpp"

namespace onto::testing {
namespace {

Interpretation cm(int domain,
                  std::initializer_list<std::pair<const char*, std::set<int>>> cs,
                  std::initializer_list<
                      std::pair<const char*, std::set<std::pair<int, int>>>>
                      rs = {}) {
  Interpretation i;
  i.domain = domain;
  for (const auto& [name, ext] : cs) i.concepts[Iri::of(name)] = ext;
  for (const auto& [name, rel] : rs) i.roles[Iri::of(name)] = rel;
  return i;
}

}  // namespace

std::vector<CuratedCase> curated_cases() {
  std::vector<CuratedCase> cases;
  auto yes = [&](std::string name, Ontology o, Axiom q) {
    cases.push_back({std::move(name), std::move(o), std::move(q), true, {}});
  };
  auto no = [&](std::string name, Ontology o, Axiom q, Interpretation m) {
    cases.push_back(
        {std::move(name), std::move(o), std::move(q), false, std::move(m)});
  };

  Concept A = atom("A"), B = atom("B"), C = atom("C"), D = atom("D");
  Concept Q = atom("Q"), X = atom("X"), Y = atom("Y");

  // --- entailments ---------------------------------------------------------
  yes("chain", onto_of({sub(A, B), sub(B, C)}), sub(A, C));
  yes("conjunction-intro", onto_of({sub(A, B), sub(A, C)}),
      sub(A, land({B, C})));
  yes("disjunction-elim", onto_of({sub(A, lor({B, C})), sub(B, D), sub(C, D)}),
      sub(A, D));
  yes("negation-clash", onto_of({sub(A, B), sub(A, neg(B))}), sub(A, bot()));
  yes("disjointness-to-negation", onto_of({disjoint(B, C), sub(A, B)}),
      sub(A, neg(C)));
  yes("exists-monotone", onto_of({sub(B, C)}),
      sub(some("r", B), some("r", C)));
  yes("forall-filler-monotone", onto_of({sub(A, only("r", B)), sub(B, C)}),
      sub(A, only("r", C)));
  yes("exists-meets-forall", onto_of({sub(A, land({some("r", B), only("r", C)}))}),
      sub(A, some("r", land({B, C}))));
  yes("role-hierarchy-exists", onto_of({subrole("r", "s")}),
      sub(some("r", B), some("s", B)));
  yes("role-hierarchy-forall", onto_of({subrole("r", "s"), sub(A, only("s", B))}),
      sub(A, only("r", B)));
  yes("transitive-compose",
      onto_of({trans("r"), sub(A, some("r", B)), sub(B, some("r", C))}),
      sub(A, some("r", C)));
  yes("transitive-forall-depth2", onto_of({trans("r"), sub(A, only("r", B))}),
      sub(A, only("r", only("r", B))));
  yes("domain-as-gci", onto_of({domain("r", C)}), sub(some("r", top()), C));
  yes("domain-applied", onto_of({domain("r", C), sub(A, some("r", B))}),
      sub(A, C));
  yes("range-as-gci", onto_of({range("r", C)}), sub(top(), only("r", C)));
  yes("range-strengthens-filler",
      onto_of({range("r", C), sub(A, some("r", B))}),
      sub(A, some("r", land({B, C}))));
  yes("range-with-unsat-filler", onto_of({range("r", C), sub(C, bot())}),
      sub(some("r", top()), bot()));
  yes("identical-definitions-merge",
      onto_of({equiv(A, land({Q, some("r", X)})),
               equiv(B, land({Q, some("r", Y)})), equiv(X, Y)}),
      equiv(A, B));
  yes("complex-lhs-gci",
      onto_of({sub(some("r", B), C), sub(A, some("r", B))}), sub(A, C));
  yes("top-axiom", onto_of({sub(top(), C)}), sub(A, C));
  yes("unsat-propagates-up", onto_of({sub(A, some("r", B)), sub(B, bot())}),
      sub(A, bot()));
  yes("disjoint-meet-unsat", onto_of({disjoint(A, B), sub(X, land({A, B}))}),
      sub(X, bot()));
  yes("hierarchy-transitivity-mix",
      onto_of({subrole("r", "s"), trans("s"), sub(A, some("r", B)),
               sub(B, some("r", C))}),
      sub(A, some("s", C)));
  yes("forall-via-subrole",
      onto_of({subrole("r", "s"), sub(A, land({only("s", C), some("r", B)}))}),
      sub(A, some("r", land({B, C}))));
  yes("union-of-existentials",
      onto_of({sub(A, lor({some("r", B), some("r", C)})), sub(B, D), sub(C, D)}),
      sub(A, some("r", D)));

  // --- non-entailments, each certified by a countermodel -------------------
  no("no-converse", onto_of({sub(A, B)}), sub(B, A),
     cm(1, {{"A", {}}, {"B", {0}}}));
  no("empty-ontology", onto_of({}), sub(A, B), cm(1, {{"A", {0}}, {"B", {}}}));
  no("disjunction-keeps-choice", onto_of({sub(A, lor({B, C}))}), sub(A, B),
     cm(1, {{"A", {0}}, {"B", {}}, {"C", {0}}}));
  no("exists-not-forall", onto_of({sub(A, some("r", B))}), sub(A, only("r", B)),
     cm(3, {{"A", {0}}, {"B", {1}}}, {{"r", {{0, 1}, {0, 2}}}}));
  no("forall-not-exists", onto_of({sub(A, only("r", B))}), sub(A, some("r", B)),
     cm(1, {{"A", {0}}, {"B", {}}}));
  no("no-transitivity-assumed",
     onto_of({sub(A, some("r", B)), sub(B, some("r", C))}), sub(A, some("r", C)),
     cm(3, {{"A", {0}}, {"B", {1}}, {"C", {2}}}, {{"r", {{0, 1}, {1, 2}}}}));
  no("subrole-direction", onto_of({subrole("r", "s"), sub(A, some("s", B))}),
     sub(A, some("r", B)),
     cm(2, {{"A", {0}}, {"B", {1}}}, {{"s", {{0, 1}}}, {"r", {}}}));
  no("domain-is-conditional", onto_of({domain("r", C)}), sub(top(), C),
     cm(1, {{"C", {}}}));
  no("range-does-not-type-filler-name",
     onto_of({range("r", C), sub(A, some("r", B))}), sub(B, C),
     cm(3, {{"A", {0}}, {"B", {1, 2}}, {"C", {1}}}, {{"r", {{0, 1}}}}));
  no("disjointness-keeps-satisfiable", onto_of({disjoint(A, B)}), sub(A, bot()),
     cm(1, {{"A", {0}}, {"B", {}}}));
  no("different-definitions-stay-apart",
     onto_of({equiv(A, land({Q, some("r", X)})),
              equiv(B, land({Q, some("r", Y)}))}),
     sub(A, B),
     cm(2, {{"A", {0}}, {"B", {}}, {"Q", {0}}, {"X", {1}}, {"Y", {}}},
        {{"r", {{0, 1}}}}));
  no("global-disjunction-keeps-choice", onto_of({sub(top(), lor({A, B}))}),
     sub(top(), A), cm(1, {{"A", {}}, {"B", {0}}}));
  no("transitive-forall-vacuous", onto_of({trans("r"), sub(A, only("r", B))}),
     sub(A, B), cm(1, {{"A", {0}}, {"B", {}}}));

  return cases;
}

}  // namespace onto::testing
