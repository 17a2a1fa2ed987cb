#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "extlat/poset.hpp"

namespace extlat {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text format:
//   poset v1
//   n <size>
//   cover <i> <j>     (1-based, i covered by j; order and duplicates irrelevant)
std::string to_text(const Poset& p);
Poset parse_poset(std::string_view text);
Poset read_poset_file(const std::string& path);

}  // namespace extlat
