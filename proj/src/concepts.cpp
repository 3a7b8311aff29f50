#include "onto/concepts.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace onto {
namespace {

struct Node {
  ConceptKind kind;
  Iri entity;                  // Atomic iri or quantifier role
  std::vector<Concept> kids;   // Not/quantifier: 1, And/Or: >= 2
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : k) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

class ConceptPool {
 public:
  static ConceptPool& get() {
    static ConceptPool pool;
    return pool;
  }

  Concept intern(ConceptKind kind, Iri entity, std::vector<Concept> kids) {
    std::vector<std::uint32_t> key;
    key.reserve(kids.size() + 2);
    key.push_back(static_cast<std::uint32_t>(kind));
    key.push_back(entity.valid() ? entity.id() : 0xffffffffu);
    for (auto k : kids) key.push_back(k.id());
    {
      std::shared_lock lock(mu_);
      auto it = index_.find(key);
      if (it != index_.end()) return Concept(it->second);
    }
    std::unique_lock lock(mu_);
    auto it = index_.find(key);
    if (it != index_.end()) return Concept(it->second);
    nodes_.push_back(Node{kind, entity, std::move(kids)});
    auto id = static_cast<std::uint32_t>(nodes_.size() - 1);
    index_.emplace(std::move(key), id);
    return Concept(id);
  }

  const Node& node(std::uint32_t id) const {
    std::shared_lock lock(mu_);
    return nodes_[id];
  }

 private:
  mutable std::shared_mutex mu_;
  std::deque<Node> nodes_;  // stable addresses
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> index_;
};

namespace {

const Node& node_of(const Concept& c) { return ConceptPool::get().node(c.id()); }

}  // namespace

Concept Concept::top() { return ConceptPool::get().intern(ConceptKind::Top, Iri(), {}); }

Concept Concept::bottom() { return ConceptPool::get().intern(ConceptKind::Bottom, Iri(), {}); }

Concept Concept::atomic(Iri iri) {
  return ConceptPool::get().intern(ConceptKind::Atomic, iri, {});
}

Concept Concept::negation(Concept c) {
  switch (c.kind()) {
    case ConceptKind::Top: return bottom();
    case ConceptKind::Bottom: return top();
    case ConceptKind::Not: return c.child();
    default: return ConceptPool::get().intern(ConceptKind::Not, Iri(), {c});
  }
}

namespace {

// Shared machinery of intersection/union_of; `conjunctive` selects And.
Concept make_nary(std::vector<Concept> members, bool conjunctive) {
  const ConceptKind self = conjunctive ? ConceptKind::And : ConceptKind::Or;
  const Concept neutral = conjunctive ? Concept::top() : Concept::bottom();
  const Concept absorbing = conjunctive ? Concept::bottom() : Concept::top();

  std::vector<Concept> flat;
  flat.reserve(members.size());
  for (auto m : members) {
    if (m.kind() == self) {
      auto kids = m.members();
      flat.insert(flat.end(), kids.begin(), kids.end());
    } else if (m != neutral) {
      flat.push_back(m);
    }
  }
  for (auto m : flat) {
    if (m == absorbing) return absorbing;
  }
  std::sort(flat.begin(), flat.end(),
            [](Concept a, Concept b) { return Concept::compare(a, b) < 0; });
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return neutral;
  if (flat.size() == 1) return flat.front();
  return ConceptPool::get().intern(self, Iri(), std::move(flat));
}

}  // namespace

Concept Concept::intersection(std::vector<Concept> members) {
  return make_nary(std::move(members), true);
}

Concept Concept::union_of(std::vector<Concept> members) {
  return make_nary(std::move(members), false);
}

Concept Concept::some(Iri role, Concept filler) {
  return ConceptPool::get().intern(ConceptKind::Exists, role, {filler});
}

Concept Concept::only(Iri role, Concept filler) {
  return ConceptPool::get().intern(ConceptKind::Forall, role, {filler});
}

ConceptKind Concept::kind() const { return node_of(*this).kind; }

Iri Concept::iri() const { return node_of(*this).entity; }

Iri Concept::role() const { return node_of(*this).entity; }

Concept Concept::child() const { return node_of(*this).kids.front(); }

std::span<const Concept> Concept::members() const {
  const Node& n = node_of(*this);
  return {n.kids.data(), n.kids.size()};
}

Concept Concept::nnf() const {
  switch (kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atomic:
      return *this;
    case ConceptKind::Not:
      return child().complement_nnf();
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> ms;
      for (auto m : members()) ms.push_back(m.nnf());
      return kind() == ConceptKind::And ? intersection(std::move(ms))
                                        : union_of(std::move(ms));
    }
    case ConceptKind::Exists:
      return some(role(), child().nnf());
    case ConceptKind::Forall:
      return only(role(), child().nnf());
  }
  return *this;
}

Concept Concept::complement_nnf() const {
  switch (kind()) {
    case ConceptKind::Top: return bottom();
    case ConceptKind::Bottom: return top();
    case ConceptKind::Atomic: return negation(*this);
    case ConceptKind::Not: return child().nnf();
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> ms;
      for (auto m : members()) ms.push_back(m.complement_nnf());
      return kind() == ConceptKind::And ? union_of(std::move(ms))
                                        : intersection(std::move(ms));
    }
    case ConceptKind::Exists:
      return only(role(), child().complement_nnf());
    case ConceptKind::Forall:
      return some(role(), child().complement_nnf());
  }
  return *this;
}

int Concept::compare(Concept a, Concept b) {
  if (a == b) return 0;
  const Node& na = node_of(a);
  const Node& nb = node_of(b);
  if (na.kind != nb.kind) return na.kind < nb.kind ? -1 : 1;
  switch (na.kind) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return 0;
    case ConceptKind::Atomic:
      return na.entity.canonical().compare(nb.entity.canonical());
    case ConceptKind::Not:
      return compare(na.kids.front(), nb.kids.front());
    case ConceptKind::Exists:
    case ConceptKind::Forall: {
      int r = na.entity.canonical().compare(nb.entity.canonical());
      if (r != 0) return r;
      return compare(na.kids.front(), nb.kids.front());
    }
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::size_t n = std::min(na.kids.size(), nb.kids.size());
      for (std::size_t i = 0; i < n; ++i) {
        int r = compare(na.kids[i], nb.kids[i]);
        if (r != 0) return r;
      }
      if (na.kids.size() == nb.kids.size()) return 0;
      return na.kids.size() < nb.kids.size() ? -1 : 1;
    }
  }
  return 0;
}

std::string Concept::to_string() const {
  switch (kind()) {
    case ConceptKind::Top: return "owl:Thing";
    case ConceptKind::Bottom: return "owl:Nothing";
    case ConceptKind::Atomic: return ":" + iri().canonical();
    case ConceptKind::Not:
      return "ObjectComplementOf(" + child().to_string() + ")";
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::string out =
          kind() == ConceptKind::And ? "ObjectIntersectionOf(" : "ObjectUnionOf(";
      bool first = true;
      for (auto m : members()) {
        if (!first) out += ' ';
        first = false;
        out += m.to_string();
      }
      out += ')';
      return out;
    }
    case ConceptKind::Exists:
      return "ObjectSomeValuesFrom(:" + role().canonical() + " " +
             child().to_string() + ")";
    case ConceptKind::Forall:
      return "ObjectAllValuesFrom(:" + role().canonical() + " " +
             child().to_string() + ")";
  }
  return {};
}

}  // namespace onto
