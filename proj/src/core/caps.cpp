#include "extlat/caps.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace extlat {
namespace {

Caps initial_caps() {
  Caps c;
  if (const char* env = std::getenv("EXTLAT_CAP")) c = caps_from_string(env, c);
  return c;
}

Caps& mutable_caps() {
  static Caps c = initial_caps();
  return c;
}

std::size_t parse_size(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = std::stoull(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad cap value: " + s);
  return static_cast<std::size_t>(v);
}

}  // namespace

const Caps& caps() { return mutable_caps(); }
void set_caps(const Caps& c) { mutable_caps() = c; }

Caps caps_from_string(const std::string& spec, Caps c) {
  if (spec.empty()) return c;
  if (spec.find('=') == std::string::npos) {
    std::size_t v = parse_size(spec);
    c.orbit_states = c.shepp_lattice = c.matching_vertices = c.ideal_states = c.witness_pairs = v;
    return c;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad cap entry: " + item);
    std::string key = item.substr(0, eq);
    std::size_t v = parse_size(item.substr(eq + 1));
    if (key == "poset_n") c.exhaustive_poset_n = static_cast<int>(v);
    else if (key == "orbit") c.orbit_states = v;
    else if (key == "shepp") c.shepp_lattice = v;
    else if (key == "matching") c.matching_vertices = v;
    else if (key == "ideals") c.ideal_states = v;
    else if (key == "witness") c.witness_pairs = v;
    else throw std::invalid_argument("unknown cap: " + key);
  }
  return c;
}

void enable_slow_mode() {
  if (mutable_caps().exhaustive_poset_n < 7) mutable_caps().exhaustive_poset_n = 7;
}

}  // namespace extlat
