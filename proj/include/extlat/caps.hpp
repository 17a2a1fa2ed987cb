#pragma once

#include <cstddef>
#include <string>

namespace extlat {

// State-space limits. Defaults can be overridden with the EXTLAT_CAP
// environment variable: either a bare integer (applied to every size cap)
// or a comma list such as "poset_n=7,orbit=2000000".
struct Caps {
  int exhaustive_poset_n = 6;
  std::size_t orbit_states = 1'000'000;
  std::size_t shepp_lattice = 100'000;
  std::size_t matching_vertices = 1'000'000;
  std::size_t ideal_states = 1u << 22;
  std::size_t witness_pairs = 50'000'000;
};

const Caps& caps();
void set_caps(const Caps& c);
Caps caps_from_string(const std::string& spec, Caps base = {});
// Lifts the exhaustive poset cap to n <= 7 (the --slow switch).
void enable_slow_mode();

}  // namespace extlat
