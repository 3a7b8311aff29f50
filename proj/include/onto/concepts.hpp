#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "onto/iri.hpp"

namespace onto {

enum class ConceptKind : std::uint8_t {
  Top,
  Bottom,
  Atomic,
  Not,
  And,
  Or,
  Exists,
  Forall,
};

// Hash-consed concept expression. Construction goes through the static
// factories, which canonicalize on the way in:
//   - And/Or members are flattened, deduplicated and sorted, so structural
//     equality is plain handle equality;
//   - neutral elements are dropped and absorbing elements collapse
//     (And(A, Top) = A, And(A, Bottom) = Bottom, dually for Or);
//   - Not(Not(C)) = C, Not(Top) = Bottom, Not(Bottom) = Top.
// Values are immutable and safe to share between threads.
class Concept {
 public:
  Concept() = default;

  static Concept top();
  static Concept bottom();
  static Concept atomic(Iri iri);
  static Concept negation(Concept c);
  static Concept intersection(std::vector<Concept> members);
  static Concept union_of(std::vector<Concept> members);
  static Concept some(Iri role, Concept filler);
  static Concept only(Iri role, Concept filler);

  ConceptKind kind() const;
  Iri iri() const;                          // Atomic
  Iri role() const;                         // Exists / Forall
  Concept child() const;                    // Not / quantifier filler
  std::span<const Concept> members() const; // And / Or

  // Negation normal form: after this, Not appears only above Atomic.
  Concept nnf() const;
  // nnf(negation(*this)) without building the intermediate Not node.
  Concept complement_nnf() const;

  bool valid() const { return id_ != kInvalid; }
  std::uint32_t id() const { return id_; }
  std::string to_string() const;  // canonical functional-style text

  // Total order on structure; stable across runs (string-based at leaves).
  static int compare(Concept a, Concept b);

  friend bool operator==(Concept a, Concept b) { return a.id_ == b.id_; }
  friend bool operator!=(Concept a, Concept b) { return a.id_ != b.id_; }

 private:
  static constexpr std::uint32_t kInvalid = 0xffffffffu;
  explicit Concept(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = kInvalid;

  friend class ConceptPool;
};

}  // namespace onto

template <>
struct std::hash<onto::Concept> {
  std::size_t operator()(onto::Concept c) const noexcept {
    return std::hash<std::uint32_t>()(c.id());
  }
};
