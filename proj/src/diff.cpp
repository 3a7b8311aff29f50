#include "onto/diff.hpp"

#include <algorithm>
#include <set>

namespace onto {

std::optional<ShapeSet> ShapeSet::parse(std::string_view spec) {
  if (spec == "all") return all();
  ShapeSet out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    std::string_view tok = comma == std::string_view::npos
                               ? spec.substr(pos)
                               : spec.substr(pos, comma - pos);
    pos = comma == std::string_view::npos ? spec.size() + 1 : comma + 1;
    if (tok.empty()) continue;
    if (tok == "i") out.i = true;
    else if (tok == "ii") out.ii = true;
    else if (tok == "iii") out.iii = true;
    else if (tok == "iv") out.iv = true;
    else if (tok == "v") out.v = true;
    else return std::nullopt;
  }
  if (!out.any()) return std::nullopt;
  return out;
}

Axiom DiffEntry::axiom() const {
  switch (shape) {
    case WitnessKind::AtomicSub:
      return SubClassOf{lhs, rhs};
    case WitnessKind::AtomicDisj:
      return SubClassOf{lhs, Concept::negation(rhs)};
    case WitnessKind::ExistsSub:
      return SubClassOf{lhs, Concept::some(role, rhs)};
    case WitnessKind::ForallSub:
      return SubClassOf{lhs, Concept::only(role, rhs)};
    case WitnessKind::RoleSub:
      return SubRoleOf{role, rhs_role};
  }
  return SubClassOf{lhs, rhs};
}

std::vector<Axiom> DiffEntry::axioms() const {
  std::vector<Axiom> out{axiom()};
  if (equivalence) out.push_back(SubClassOf{rhs, lhs});
  return out;
}

std::vector<Axiom> candidates(const Signature& scope, ShapeSet shapes,
                              const std::vector<Iri>& excluded) {
  std::vector<Concept> concepts;
  {
    std::set<Iri> skip(excluded.begin(), excluded.end());
    for (auto iri : scope.concepts)
      if (!skip.count(iri)) concepts.push_back(Concept::atomic(iri));
  }
  std::vector<Iri> roles(scope.roles.begin(), scope.roles.end());

  std::vector<Axiom> out;
  if (shapes.i) {
    // lhs ranges over scope + Thing, rhs over scope + Nothing; tautologies
    // A <= A, A <= Thing, Nothing <= A and the inconsistency marker
    // Thing <= Nothing are excluded.
    std::vector<Concept> lhs = concepts;
    lhs.push_back(Concept::top());
    std::vector<Concept> rhs = concepts;
    rhs.push_back(Concept::bottom());
    for (auto a : lhs) {
      for (auto b : rhs) {
        if (a == b) continue;
        if (a.kind() == ConceptKind::Top && b.kind() == ConceptKind::Bottom)
          continue;
        out.push_back(SubClassOf{a, b});
      }
    }
  }
  if (shapes.ii) {
    // unordered pairs; A <= not A is the unsatisfiability marker and
    // Nothing-disjointness is vacuous, both skipped
    for (std::size_t x = 0; x < concepts.size(); ++x) {
      for (std::size_t y = x + 1; y < concepts.size(); ++y) {
        out.push_back(
            SubClassOf{concepts[x], Concept::negation(concepts[y])});
      }
    }
  }
  if (shapes.iii || shapes.iv) {
    for (auto a : concepts) {
      for (auto r : roles) {
        for (auto b : concepts) {
          if (shapes.iii) out.push_back(SubClassOf{a, Concept::some(r, b)});
          if (shapes.iv) out.push_back(SubClassOf{a, Concept::only(r, b)});
        }
      }
    }
  }
  if (shapes.v) {
    for (auto r : roles)
      for (auto s : roles)
        if (r != s) out.push_back(SubRoleOf{r, s});
  }
  return out;
}

namespace {

WitnessKind shape_of(const Axiom& candidate) {
  if (candidate.kind() == AxiomKind::SubRoleOf) return WitnessKind::RoleSub;
  Concept sup = candidate.as<SubClassOf>().sup;
  switch (sup.kind()) {
    case ConceptKind::Not: return WitnessKind::AtomicDisj;
    case ConceptKind::Exists: return WitnessKind::ExistsSub;
    case ConceptKind::Forall: return WitnessKind::ForallSub;
    default: return WitnessKind::AtomicSub;
  }
}

int entry_rank(const DiffEntry& e) { return static_cast<int>(e.shape); }

bool entry_less(const DiffEntry& a, const DiffEntry& b) {
  if (entry_rank(a) != entry_rank(b)) return entry_rank(a) < entry_rank(b);
  int r = Concept::compare(a.lhs, b.lhs);
  if (r != 0) return r < 0;
  if (a.role != b.role) return a.role < b.role;
  r = Concept::compare(a.rhs, b.rhs);
  if (r != 0) return r < 0;
  return a.rhs_role < b.rhs_role;
}

}  // namespace

DiffResult logical_diff(const Ontology& o_new, const Ontology& o_old,
                        const Signature& scope, const DiffOptions& options) {
  Reasoner r_new(o_new);
  Reasoner r_old(o_old);
  DiffResult result;

  std::vector<Iri> excluded;
  for (auto iri : scope.concepts) {
    if (!r_new.is_satisfiable(Concept::atomic(iri))) {
      if (r_old.is_satisfiable(Concept::atomic(iri)))
        result.new_unsatisfiable.push_back(iri);
      if (!options.include_unsatisfiable) excluded.push_back(iri);
    }
  }

  std::vector<DiffEntry> raw;
  for (const auto& cand : candidates(scope, options.shapes, excluded)) {
    // told pruning: a syntactic assertion of o_old is trivially entailed
    if (o_old.contains(cand)) continue;
    if (!r_new.entails(cand)) continue;
    if (r_old.entails(cand)) continue;

    DiffEntry e;
    e.shape = shape_of(cand);
    e.new_in = o_new.id();
    e.missing_in = o_old.id();
    if (e.shape == WitnessKind::RoleSub) {
      e.role = cand.as<SubRoleOf>().sub;
      e.rhs_role = cand.as<SubRoleOf>().sup;
    } else {
      const auto& sc = cand.as<SubClassOf>();
      e.lhs = sc.sub;
      switch (e.shape) {
        case WitnessKind::AtomicSub:
          e.rhs = sc.sup;
          break;
        case WitnessKind::AtomicDisj:
          e.rhs = sc.sup.child();
          break;
        case WitnessKind::ExistsSub:
        case WitnessKind::ForallSub:
          e.role = sc.sup.role();
          e.rhs = sc.sup.child();
          break;
        default:
          break;
      }
    }
    raw.push_back(std::move(e));
  }

  // Coalesce mutual shape-(i) pairs into equivalence entries.
  std::set<std::pair<std::uint32_t, std::uint32_t>> sub_pairs;
  for (const auto& e : raw) {
    if (e.shape == WitnessKind::AtomicSub)
      sub_pairs.insert({e.lhs.id(), e.rhs.id()});
  }
  std::vector<DiffEntry> entries;
  std::set<std::pair<std::uint32_t, std::uint32_t>> emitted_equiv;
  for (auto& e : raw) {
    if (e.shape == WitnessKind::AtomicSub &&
        sub_pairs.count({e.rhs.id(), e.lhs.id()})) {
      Concept a = e.lhs, b = e.rhs;
      if (Concept::compare(b, a) < 0) std::swap(a, b);
      if (!emitted_equiv.insert({a.id(), b.id()}).second) continue;
      e.lhs = a;
      e.rhs = b;
      e.equivalence = true;
    }
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), entry_less);

  if (options.max_justifications > 0) {
    for (auto& e : entries) {
      for (const auto& ax : e.axioms()) {
        auto jr = justify(o_new, ax, options.max_justifications);
        for (auto& j : jr.justifications) {
          if (static_cast<int>(e.justifications.size()) >=
              options.max_justifications)
            break;
          e.justifications.push_back(std::move(j));
        }
      }
    }
  }

  result.entries = std::move(entries);
  return result;
}

}  // namespace onto
