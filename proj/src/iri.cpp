#include "onto/iri.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace onto {
namespace {

struct IriPool {
  std::shared_mutex mu;
  std::deque<std::string> strings;  // stable addresses
  std::unordered_map<std::string_view, std::uint32_t> index;

  static IriPool& get() {
    static IriPool pool;
    return pool;
  }
};

}  // namespace

Iri Iri::of(std::string_view canonical) {
  auto& pool = IriPool::get();
  {
    std::shared_lock lock(pool.mu);
    auto it = pool.index.find(canonical);
    if (it != pool.index.end()) return Iri(it->second);
  }
  std::unique_lock lock(pool.mu);
  auto it = pool.index.find(canonical);
  if (it != pool.index.end()) return Iri(it->second);
  pool.strings.emplace_back(canonical);
  auto id = static_cast<std::uint32_t>(pool.strings.size() - 1);
  pool.index.emplace(pool.strings.back(), id);
  return Iri(id);
}

const std::string& Iri::canonical() const {
  static const std::string empty;
  if (!valid()) return empty;
  auto& pool = IriPool::get();
  std::shared_lock lock(pool.mu);
  return pool.strings[id_];
}

std::string_view Iri::prefix() const {
  const std::string& s = canonical();
  auto pos = s.find_first_of("_:");
  if (pos == std::string::npos || pos == 0 || pos + 1 >= s.size()) return {};
  for (std::size_t i = pos + 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return {};
  }
  return std::string_view(s).substr(0, pos);
}

bool Iri::operator<(const Iri& other) const {
  if (id_ == other.id_) return false;
  return canonical() < other.canonical();
}

}  // namespace onto
