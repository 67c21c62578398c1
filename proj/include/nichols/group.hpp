#pragma once

// Permutation groups with a stabilizer chain (base and strong generating set,
// deterministic Schreier-Sims). Exact order, membership tests, uniform random
// elements via transversal products, bounded full enumeration.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nichols/perm.hpp"

namespace nichols {

struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic PRNG (splitmix64). Draws are unbiased and platform-stable.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection.
  uint64_t below(uint64_t n) {
    uint64_t lim = ~0ull - (~0ull % n);
    uint64_t v;
    do {
      v = next();
    } while (v >= lim);
    return v % n;
  }

private:
  uint64_t state_;
};

class PermGroup {
public:
  PermGroup() : degree_(1), order_(1) {}  // the trivial group on one point

  PermGroup(unsigned degree, std::vector<Perm> generators)
      : degree_(degree), gens_(std::move(generators)) {
    for (const Perm& g : gens_)
      if (g.degree() != degree_)
        throw std::invalid_argument("PermGroup: generator degree mismatch");
    build_chain();
  }

  static PermGroup trivial(unsigned degree) { return PermGroup(degree, {}); }

  unsigned degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    Perm h = g;
    for (const Level& lv : chain_) {
      unsigned beta = h[lv.point];
      if (lv.where[beta] < 0) return false;
      h = lv.trans[lv.where[beta]].inverse() * h;
    }
    return h.is_identity();
  }

  // Uniform over the group: independent transversal choice per level.
  Perm random_element(Rng& rng) const {
    Perm g(degree_);
    for (const Level& lv : chain_) {
      const Perm& u = lv.trans[rng.below(lv.trans.size())];
      g = g * u;
    }
    return g;
  }

  // All elements, in a deterministic order. Throws budget_error when the
  // group is larger than `limit`.
  std::vector<Perm> elements(uint64_t limit = 2000000) const {
    if (order_ > limit)
      throw budget_error("PermGroup::elements: order " + std::to_string(order_) +
                         " exceeds enumeration budget " + std::to_string(limit));
    std::vector<Perm> out;
    out.reserve(static_cast<size_t>(order_));
    Perm id(degree_);
    enumerate_rec(0, id, out);
    return out;
  }

  // Stabilizer-chain access (for backtrack searches).
  size_t chain_length() const { return chain_.size(); }
  unsigned base_point(size_t i) const { return chain_[i].point; }
  const std::vector<unsigned>& basic_orbit(size_t i) const { return chain_[i].orbit; }
  bool in_basic_orbit(size_t i, unsigned pt) const { return chain_[i].where[pt] >= 0; }
  const Perm& transversal(size_t i, unsigned pt) const {
    int k = chain_[i].where[pt];
    if (k < 0) throw std::logic_error("transversal: point not in basic orbit");
    return chain_[i].trans[static_cast<size_t>(k)];
  }

private:
  struct Level {
    unsigned point = 0;
    std::vector<Perm> gens;       // strong generators fixing all earlier base points
    std::vector<unsigned> orbit;  // basic orbit, BFS order, orbit[0] == point
    std::vector<Perm> trans;      // trans[k] maps point -> orbit[k]
    std::vector<int> where;       // point -> orbit index, -1 outside
  };

  void rebuild_orbit(Level& lv) {
    lv.orbit.assign(1, lv.point);
    lv.trans.assign(1, Perm(degree_));
    lv.where.assign(degree_, -1);
    lv.where[lv.point] = 0;
    for (size_t head = 0; head < lv.orbit.size(); ++head) {
      unsigned pt = lv.orbit[head];
      for (const Perm& g : lv.gens) {
        unsigned im = g[pt];
        if (lv.where[im] < 0) {
          lv.where[im] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(im);
          lv.trans.push_back(g * lv.trans[head]);
        }
      }
    }
  }

  // Strips g through levels [from, end); returns residue and stop level.
  std::pair<Perm, size_t> strip(Perm g, size_t from) const {
    for (size_t i = from; i < chain_.size(); ++i) {
      unsigned beta = g[chain_[i].point];
      int k = chain_[i].where[beta];
      if (k < 0) return {g, i};
      g = chain_[i].trans[static_cast<size_t>(k)].inverse() * g;
    }
    return {g, chain_.size()};
  }

  void extend_base_for(const Perm& h) {
    for (unsigned p = 0; p < degree_; ++p) {
      if (h[p] != p) {
        Level lv;
        lv.point = p;
        chain_.push_back(lv);
        rebuild_orbit(chain_.back());
        return;
      }
    }
    throw std::logic_error("extend_base_for: identity residue");
  }

  // Inserts h (fixing base points before level j) at levels <= j.
  void insert_strong_gen(const Perm& h, size_t j) {
    if (j == chain_.size()) extend_base_for(h);
    for (size_t k = 0; k <= j && k < chain_.size(); ++k) {
      bool fixes_prefix = true;
      for (size_t t = 0; t < k; ++t)
        if (h[chain_[t].point] != chain_[t].point) {
          fixes_prefix = false;
          break;
        }
      if (fixes_prefix) {
        chain_[k].gens.push_back(h);
        rebuild_orbit(chain_[k]);
      }
    }
  }

  void build_chain() {
    chain_.clear();
    for (const Perm& g : gens_) {
      if (g.is_identity()) continue;
      auto [h, j] = strip(g, 0);
      if (!h.is_identity()) insert_strong_gen(h, j);
    }
    if (chain_.empty()) {
      order_ = 1;
      return;
    }

    // Deterministic Schreier-Sims: verify every Schreier generator strips to
    // the identity, extending the chain until the condition holds everywhere.
    size_t i = chain_.size();
    while (i > 0) {
      size_t lev = i - 1;
      bool descend = true;
      Level& lv = chain_[lev];
      for (size_t oi = 0; oi < lv.orbit.size() && descend; ++oi) {
        for (const Perm& s : lv.gens) {
          unsigned delta = lv.orbit[oi];
          const Perm& u = lv.trans[oi];
          const Perm& usd = lv.trans[static_cast<size_t>(lv.where[s[delta]])];
          Perm schreier = usd.inverse() * (s * u);
          if (schreier.is_identity()) continue;
          auto [h, j] = strip(schreier, lev + 1);
          if (!h.is_identity()) {
            insert_strong_gen(h, j);
            i = j + 1;
            descend = false;
            break;
          }
        }
      }
      if (descend) --i;
    }

    order_ = 1;
    for (const Level& lv : chain_) order_ *= lv.orbit.size();
  }

  void enumerate_rec(size_t level, const Perm& prefix, std::vector<Perm>& out) const {
    if (level == chain_.size()) {
      out.push_back(prefix);
      return;
    }
    for (const Perm& u : chain_[level].trans) enumerate_rec(level + 1, prefix * u, out);
  }

  unsigned degree_;
  std::vector<Perm> gens_;
  std::vector<Level> chain_;
  uint64_t order_ = 1;
};

// Built-in generators for the five Mathieu simple groups.
inline PermGroup mathieu(const std::string& name) {
  auto mk = [](unsigned n, std::initializer_list<const char*> cycs) {
    std::vector<Perm> gens;
    for (const char* c : cycs) gens.push_back(Perm::parse_cycles(c, n));
    return PermGroup(n, std::move(gens));
  };
  if (name == "m11")
    return mk(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"});
  if (name == "m12")
    return mk(12, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)",
                   "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"});
  if (name == "m22")
    return mk(22, {"(1,2,3,4,5,6,7,8,9,10,11)(12,13,14,15,16,17,18,19,20,21,22)",
                   "(1,4,5,9,3)(2,8,10,7,6)(12,15,16,20,14)(13,19,21,18,17)",
                   "(1,21)(2,10,8,6)(3,13,4,17)(5,19,9,18)(11,22)(12,14,16,20)"});
  if (name == "m23")
    return mk(23, {"(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
                   "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)"});
  if (name == "m24")
    return mk(24, {"(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
                   "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
                   "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)"});
  throw std::invalid_argument("unknown built-in group: " + name);
}

}  // namespace nichols
