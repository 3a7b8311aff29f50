#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace onto {

// Interned entity identifier. Two Iri values are equal iff their canonical
// strings are equal; ordering follows the canonical string so every sorted
// output is stable across runs.
class Iri {
 public:
  Iri() = default;

  static Iri of(std::string_view canonical);

  const std::string& canonical() const;

  // Leading id-space of ids shaped like "HP_0000969" or "HP:0000969"
  // (the tail after the separator must be numeric). Empty for plain names
  // such as "part_of".
  std::string_view prefix() const;

  bool valid() const { return id_ != kInvalid; }
  std::uint32_t id() const { return id_; }

  friend bool operator==(Iri a, Iri b) { return a.id_ == b.id_; }
  friend bool operator!=(Iri a, Iri b) { return a.id_ != b.id_; }
  bool operator<(const Iri& other) const;

 private:
  static constexpr std::uint32_t kInvalid = 0xffffffffu;
  explicit Iri(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = kInvalid;
};

}  // namespace onto

template <>
struct std::hash<onto::Iri> {
  std::size_t operator()(onto::Iri i) const noexcept {
    return std::hash<std::uint32_t>()(i.id());
  }
};
