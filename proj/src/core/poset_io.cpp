#include "extlat/poset_io.hpp"

#include <fstream>
#include <sstream>

namespace extlat {

std::string to_text(const Poset& p) {
  std::ostringstream os;
  os << "poset v1\nn " << p.size() << '\n';
  for (auto [x, y] : p.cover_pairs()) os << "cover " << x + 1 << ' ' << y + 1 << '\n';
  return os.str();
}

namespace {
int parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw ParseError(std::string("bad ") + what + ": " + tok);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(std::string("bad ") + what + ": " + tok);
  }
}
}  // namespace

Poset parse_poset(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word, version;
  if (!(in >> word >> version) || word != "poset" || version != "v1") throw ParseError("missing 'poset v1' header");
  std::string tok;
  if (!(in >> word >> tok) || word != "n") throw ParseError("missing 'n <size>' line");
  int n = parse_int(tok, "size");
  if (n < 0 || n > kMaxElements) throw ParseError("size out of range");
  std::vector<std::pair<int, int>> rel;
  while (in >> word) {
    if (word != "cover") throw ParseError("unexpected token: " + word);
    std::string a, b;
    if (!(in >> a >> b)) throw ParseError("truncated cover line");
    int x = parse_int(a, "element"), y = parse_int(b, "element");
    if (x < 1 || y < 1 || x > n || y > n) throw ParseError("cover element out of range");
    rel.emplace_back(x - 1, y - 1);
  }
  return Poset::from_relations(n, rel);
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_poset(ss.str());
}

}  // namespace extlat
