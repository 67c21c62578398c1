#pragma once

// Group definition files and digests.
//
// Format: a line holding the degree, then one generator per line in
// disjoint-cycle notation with 1-based points. Blank lines and lines starting
// with '#' are ignored.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nichols/group.hpp"
#include "nichols/perm.hpp"

namespace nichols {

struct GroupDef {
  unsigned degree = 1;
  std::vector<Perm> generators;

  std::string canonical_text() const {
    std::ostringstream os;
    os << degree << "\n";
    for (const Perm& g : generators) os << g.cycles() << "\n";
    return os.str();
  }
};

inline uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string digest_hex(const GroupDef& def) {
  uint64_t h = fnv1a64(def.canonical_text());
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline GroupDef parse_group_def(std::istream& in) {
  GroupDef def;
  std::string line;
  bool have_degree = false;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    std::string t = line.substr(a, b - a + 1);
    if (t.empty() || t[0] == '#') continue;
    if (!have_degree) {
      def.degree = static_cast<unsigned>(std::stoul(t));
      have_degree = true;
    } else {
      def.generators.push_back(Perm::parse_cycles(t, def.degree));
    }
  }
  if (!have_degree) throw std::invalid_argument("group definition: missing degree line");
  return def;
}

inline GroupDef load_group_def(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group definition: " + path);
  return parse_group_def(in);
}

inline GroupDef builtin_group_def(const std::string& name) {
  PermGroup g = mathieu(name);
  return GroupDef{g.degree(), g.generators()};
}

}  // namespace nichols
