#pragma once

// Parser for the witness-family fixture format (fixtures/families.txt).

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nichols/perm.hpp"

namespace nichols {

struct FamilyFixture {
  std::string kind;   // "dp" or "o2"
  std::string group;  // built-in group name
  unsigned klass = 0;
  unsigned p = 0;  // for dp
  bool invert = false;
  bool recover_sigma1 = false;
  std::optional<std::string> sigma0, sigma1, sigma2;
  std::optional<long long> sigma6_pow;  // o2: sigma6 = sigma1^d
  bool sigma6_chain = false;            // o2: sigma6 = sigma2 > sigma3
  std::optional<long long> tau_pow;     // o2: tau_l = sigma_l^e
  bool tau_inv = false;                 // o2: compatible inverse arrangement
  std::optional<std::string> conjugator;  // o2: g with g > sigma1 = tau1
};

inline std::vector<FamilyFixture> load_family_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family fixtures: " + path);
  std::vector<FamilyFixture> out;
  std::optional<FamilyFixture> cur;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "dp" || tag == "o2") {
      cur.emplace();
      cur->kind = tag;
      ls >> cur->group >> cur->klass;
      if (tag == "dp") ls >> cur->p;
    } else if (tag == "end") {
      if (!cur) throw std::runtime_error("families: stray end");
      out.push_back(*cur);
      cur.reset();
    } else if (!cur) {
      throw std::runtime_error("families: data outside a block: " + line);
    } else if (tag == "invert") {
      cur->invert = true;
    } else if (tag == "sigma0" || tag == "sigma1" || tag == "sigma2") {
      std::string rest;
      ls >> rest;
      if (rest == "recover") {
        cur->recover_sigma1 = true;
      } else {
        if (tag == "sigma0") cur->sigma0 = rest;
        if (tag == "sigma1") cur->sigma1 = rest;
        if (tag == "sigma2") cur->sigma2 = rest;
      }
    } else if (tag == "sigma6") {
      std::string mode;
      ls >> mode;
      if (mode == "pow") {
        long long d;
        ls >> d;
        cur->sigma6_pow = d;
      } else if (mode == "chain") {
        cur->sigma6_chain = true;
      } else {
        throw std::runtime_error("families: bad sigma6 mode");
      }
    } else if (tag == "tau") {
      std::string mode;
      ls >> mode;
      if (mode == "pow") {
        long long e;
        ls >> e;
        cur->tau_pow = e;
      } else if (mode == "inv") {
        cur->tau_inv = true;
      } else {
        throw std::runtime_error("families: bad tau mode");
      }
    } else if (tag == "g") {
      std::string rest;
      ls >> rest;
      cur->conjugator = rest;
    } else {
      throw std::runtime_error("families: unknown tag " + tag);
    }
  }
  if (cur) throw std::runtime_error("families: missing end");
  return out;
}

}  // namespace nichols
