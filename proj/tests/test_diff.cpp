#include <doctest.h>

#include <set>

#include "onto/diff.hpp"
#include "onto/reasoner.hpp"
#include "onto/signature.hpp"
#include "support/dsl.hpp"
#include "support/gen.hpp"

using namespace onto;
using namespace onto::testing;

namespace {

Signature scope_of(std::initializer_list<const char*> concepts,
                   std::initializer_list<const char*> roles = {}) {
  Signature s;
  for (auto c : concepts) s.concepts.insert(iri(c));
  for (auto r : roles) s.roles.insert(iri(r));
  return s;
}

std::set<std::string> texts(const std::vector<Axiom>& axioms) {
  std::set<std::string> out;
  for (const auto& a : axioms) out.insert(a.to_string());
  return out;
}

// The straight double-entailment loop the implementation must match.
std::set<std::string> brute_force_diff(const Ontology& o_new,
                                       const Ontology& o_old,
                                       const Signature& scope, ShapeSet shapes) {
  Reasoner rn(o_new), ro(o_old);
  std::set<std::string> out;
  for (const auto& cand : candidates(scope, shapes)) {
    if (rn.entails(cand) && !ro.entails(cand)) out.insert(cand.to_string());
  }
  return out;
}

std::set<std::string> entry_axiom_texts(const DiffResult& d) {
  std::set<std::string> out;
  for (const auto& e : d.entries)
    for (const auto& ax : e.axioms()) out.insert(ax.to_string());
  return out;
}

}  // namespace

TEST_CASE("candidates: two concepts, shape i") {
  auto cs = candidates(scope_of({"A", "B"}), ShapeSet::only_i());
  std::set<std::string> expected{
      "SubClassOf(:A :B)",
      "SubClassOf(:B :A)",
      "SubClassOf(:A owl:Nothing)",
      "SubClassOf(:B owl:Nothing)",
      "SubClassOf(owl:Thing :A)",
      "SubClassOf(owl:Thing :B)",
  };
  CHECK(texts(cs) == expected);
}

TEST_CASE("candidates: no roles means no shape-v stream") {
  ShapeSet v{false, false, false, false, true};
  CHECK(candidates(scope_of({"A", "B"}), v).empty());
}

TEST_CASE("candidates: combinatorial counts") {
  ShapeSet iii{false, false, true, false, false};
  auto cs = candidates(scope_of({"A", "B", "C"}, {"r", "s"}), iii);
  CHECK(cs.size() == 3 * 2 * 3);
  ShapeSet iv{false, false, false, true, false};
  CHECK(candidates(scope_of({"A", "B", "C"}, {"r", "s"}), iv).size() == 18);
  ShapeSet v{false, false, false, false, true};
  CHECK(candidates(scope_of({}, {"r", "s", "t"}), v).size() == 6);
  ShapeSet ii{false, true, false, false, false};
  CHECK(candidates(scope_of({"A", "B", "C"}), ii).size() == 3);  // unordered
}

TEST_CASE("candidates: no duplicates, excluded concepts dropped") {
  auto cs = candidates(scope_of({"A", "B", "C"}, {"r"}), ShapeSet::all(),
                       {iri("B")});
  auto t = texts(cs);
  CHECK(t.size() == cs.size());
  for (const auto& s : t) CHECK(s.find(":B") == std::string::npos);
}

TEST_CASE("shape parsing") {
  auto s = ShapeSet::parse("i,iii,v");
  REQUIRE(s.has_value());
  CHECK(s->i);
  CHECK_FALSE(s->ii);
  CHECK(s->iii);
  CHECK_FALSE(s->iv);
  CHECK(s->v);
  CHECK(ShapeSet::parse("all").has_value());
  CHECK_FALSE(ShapeSet::parse("vi").has_value());
  CHECK_FALSE(ShapeSet::parse("").has_value());
}

TEST_CASE("logical_diff: self-difference is empty") {
  Rng rng(501);
  for (int i = 0; i < 10; ++i) {
    Ontology o = random_alch_ontology(rng, 6, 2, 8);
    Signature scope = signature_of(o);
    DiffOptions opts;
    opts.shapes = ShapeSet::all();
    opts.include_unsatisfiable = true;
    DiffResult d = logical_diff(o, o, scope, opts);
    CHECK(d.entries.empty());
    CHECK(d.new_unsatisfiable.empty());
  }
}

TEST_CASE("logical_diff: worked example") {
  Ontology o_new = onto_of({sub(atom("A"), atom("B")), sub(atom("B"), atom("C"))});
  Ontology o_old = onto_of({sub(atom("A"), atom("B"))});
  DiffResult d = logical_diff(o_new, o_old, scope_of({"A", "B", "C"}));
  auto got = entry_axiom_texts(d);
  std::set<std::string> expected{"SubClassOf(:A :C)", "SubClassOf(:B :C)"};
  CHECK(got == expected);
}

TEST_CASE("logical_diff: equivalences coalesce into one entry") {
  Ontology o_new = onto_of({sub(atom("A"), atom("B")), sub(atom("B"), atom("A"))});
  Ontology o_old = onto_of({});
  DiffResult d = logical_diff(o_new, o_old, scope_of({"A", "B"}));
  REQUIRE(d.entries.size() == 1);
  CHECK(d.entries[0].equivalence);
  CHECK(d.entries[0].lhs == atom("A"));  // canonical orientation
  CHECK(d.entries[0].rhs == atom("B"));
  // the expanded axiom pair covers both directions
  CHECK(entry_axiom_texts(d) ==
        std::set<std::string>{"SubClassOf(:A :B)", "SubClassOf(:B :A)"});
}

TEST_CASE("logical_diff: one-directional subsumption does not coalesce") {
  Ontology o_new = onto_of({sub(atom("A"), atom("B"))});
  Ontology o_old = onto_of({});
  DiffResult d = logical_diff(o_new, o_old, scope_of({"A", "B"}));
  REQUIRE(d.entries.size() == 1);
  CHECK_FALSE(d.entries[0].equivalence);
}

TEST_CASE("logical_diff: matches brute force on random small instances") {
  Rng rng(503);
  for (int i = 0; i < 12; ++i) {
    Ontology o_old = random_el_ontology(rng, 6, 2, 8);
    Ontology o_new = o_old;
    Ontology extra = random_el_ontology(rng, 6, 2, 4);
    for (const auto& ax : extra.axioms()) o_new.add(ax);

    Signature scope = Signature::intersection(signature_of(o_new),
                                              Signature::union_of(
                                                  signature_of(o_new),
                                                  signature_of(o_old)));
    DiffOptions opts;
    opts.shapes = ShapeSet::all();
    opts.include_unsatisfiable = true;  // align with the raw loop
    DiffResult d = logical_diff(o_new, o_old, scope, opts);
    CHECK(entry_axiom_texts(d) ==
          brute_force_diff(o_new, o_old, scope, ShapeSet::all()));
  }
}

TEST_CASE("logical_diff: every entry re-verifies with two entailment calls") {
  Rng rng(509);
  Ontology o_old = random_alch_ontology(rng, 7, 2, 9);
  Ontology o_new = o_old;
  Ontology extra = random_alch_ontology(rng, 7, 2, 5);
  for (const auto& ax : extra.axioms()) o_new.add(ax);
  Signature scope = signature_of(o_new);
  DiffOptions opts;
  opts.shapes = ShapeSet::all();
  DiffResult d = logical_diff(o_new, o_old, scope, opts);
  Reasoner rn(o_new), ro(o_old);
  for (const auto& e : d.entries) {
    for (const auto& ax : e.axioms()) {
      CHECK(rn.entails(ax));
      CHECK_FALSE(ro.entails(ax));
    }
  }
}

TEST_CASE("logical_diff: scope restriction") {
  Ontology o_new = onto_of({sub(atom("A"), atom("B")), sub(atom("X"), atom("Y"))});
  Ontology o_old;
  DiffResult d = logical_diff(o_new, o_old, scope_of({"A", "B"}));
  for (const auto& e : d.entries) {
    for (auto c : {e.lhs, e.rhs}) {
      if (c.kind() == ConceptKind::Atomic) {
        CHECK(c.iri() != iri("X"));
        CHECK(c.iri() != iri("Y"));
      }
    }
  }
}

TEST_CASE("logical_diff: unsatisfiable concepts are segregated") {
  // B becomes unsatisfiable only in the new ontology
  Ontology o_new = onto_of({disjoint(atom("A"), atom("C")),
                            sub(atom("B"), land({atom("A"), atom("C")})),
                            sub(atom("A"), atom("D"))});
  Ontology o_old = onto_of({sub(atom("B"), atom("A"))});
  DiffResult d =
      logical_diff(o_new, o_old, scope_of({"A", "B", "C", "D"}));
  CHECK(d.new_unsatisfiable == std::vector<Iri>{iri("B")});
  for (const auto& e : d.entries) {
    CHECK(e.lhs != atom("B"));
    CHECK(e.rhs != atom("B"));
  }

  DiffOptions keep;
  keep.include_unsatisfiable = true;
  DiffResult d2 = logical_diff(o_new, o_old, scope_of({"A", "B", "C", "D"}), keep);
  bool b_seen = false;
  for (const auto& e : d2.entries)
    if (e.lhs == atom("B")) b_seen = true;
  CHECK(b_seen);
}

TEST_CASE("logical_diff: provenance fields") {
  Ontology o_new = onto_of({sub(atom("A"), atom("B"))}, "newer");
  Ontology o_old = onto_of({}, "older");
  DiffResult d = logical_diff(o_new, o_old, scope_of({"A", "B"}));
  REQUIRE(d.entries.size() == 1);
  CHECK(d.entries[0].new_in == iri("newer"));
  CHECK(d.entries[0].missing_in == iri("older"));
}

TEST_CASE("logical_diff: attached justifications are sufficient") {
  Ontology o_new = onto_of({sub(atom("A"), atom("B")), sub(atom("B"), atom("C"))});
  Ontology o_old = onto_of({sub(atom("A"), atom("B"))});
  DiffOptions opts;
  opts.max_justifications = 2;
  DiffResult d = logical_diff(o_new, o_old, scope_of({"A", "B", "C"}), opts);
  REQUIRE_FALSE(d.entries.empty());
  for (const auto& e : d.entries) {
    REQUIRE_FALSE(e.justifications.empty());
    for (const auto& j : e.justifications) {
      Ontology sub_onto(iri("j"));
      for (const auto& ax : j.axioms) sub_onto.add(ax);
      CHECK(Reasoner(sub_onto).entails(j.entailed));
    }
  }
}

TEST_CASE("logical_diff: deterministic output order") {
  Rng rng(521);
  Ontology o_old = random_alch_ontology(rng, 6, 2, 6);
  Ontology o_new = o_old;
  Ontology extra = random_alch_ontology(rng, 6, 2, 4);
  for (const auto& ax : extra.axioms()) o_new.add(ax);
  Signature scope = signature_of(o_new);
  DiffOptions opts;
  opts.shapes = ShapeSet::all();
  DiffResult a = logical_diff(o_new, o_old, scope, opts);
  DiffResult b = logical_diff(o_new, o_old, scope, opts);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].axioms() == b.entries[i].axioms());
  }
}
