#include <unordered_map>

#include "extlat/lab.hpp"

namespace extlat {

namespace {

struct Key {
  std::vector<Mask> rows;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ k.rows.size();
    for (Mask r : k.rows) h = (h ^ r) * 0x100000001b3ull + (h >> 29);
    return h;
  }
};

constexpr std::size_t kMaxEntries = 1u << 18;

Key key_of(const Poset& p) { return Key{p.above_rows()}; }

template <class Map>
void bound(Map& m) {
  if (m.size() >= kMaxEntries) m.clear();
}

thread_local std::unordered_map<Key, Count, KeyHash> extension_cache;
thread_local std::unordered_map<Key, IdealChainProfile, KeyHash> profile_cache;

}  // namespace

Count cached_extensions(const Poset& p) {
  Key k = key_of(p);
  auto it = extension_cache.find(k);
  if (it != extension_cache.end()) return it->second;
  bound(extension_cache);
  return extension_cache.emplace(std::move(k), count_extensions(p)).first->second;
}

IdealChainProfile cached_profile(const Poset& p) {
  Key k = key_of(p);
  auto it = profile_cache.find(k);
  if (it != profile_cache.end()) return it->second;
  bound(profile_cache);
  return profile_cache.emplace(std::move(k), ideal_chain_profile(p)).first->second;
}

Count cached_order_polynomial(const Poset& p, long t) {
  Key k = key_of(p);
  auto it = profile_cache.find(k);
  if (it != profile_cache.end()) return order_polynomial(it->second, t);
  return order_polynomial(cached_profile(p), t);
}

void clear_caches() {
  extension_cache.clear();
  profile_cache.clear();
}

}  // namespace extlat
