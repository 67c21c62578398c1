#pragma once

// Conjugacy tests and centralizers inside a permutation group.
//
// Two exact strategies, chosen by predicted cost:
//   - hashed conjugation-orbit enumeration (bounded by an orbit budget);
//   - enumeration of the full S_n conjugator coset (rotations of matching
//     cycles times permutations of same-length cycles) filtered through the
//     stabilizer-chain membership test.
// Every conjugacy question this project asks is covered by at least one of
// the two within its budget; exhausting both is a hard error.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "nichols/group.hpp"
#include "nichols/orbit.hpp"
#include "nichols/perm.hpp"

namespace nichols {

struct ConjBudgets {
  uint64_t orbit = uint64_t(1) << 23;  // stored elements
  uint64_t coset = 400000;             // S_n conjugator candidates
};

namespace detail {

// Cycles of p grouped by length; each cycle listed from its minimal point.
inline std::vector<std::vector<std::vector<unsigned>>> cycles_by_length(const Perm& p) {
  std::vector<std::vector<unsigned>> cycles;
  std::vector<bool> seen(p.degree(), false);
  for (unsigned i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<unsigned> cyc;
    unsigned j = i;
    do {
      seen[j] = true;
      cyc.push_back(j);
      j = p[j];
    } while (j != i);
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a[0] < b[0];
            });
  std::vector<std::vector<std::vector<unsigned>>> blocks;
  for (auto& c : cycles) {
    if (blocks.empty() || blocks.back()[0].size() != c.size()) blocks.emplace_back();
    blocks.back().push_back(std::move(c));
  }
  return blocks;
}

// |C_{S_n}(x)| = prod over length blocks of l^m * m!.
inline std::optional<uint64_t> sn_conjugator_count(const Perm& x, const Perm& y) {
  if (x.cycle_type() != y.cycle_type()) return std::nullopt;
  uint64_t count = 1;
  auto blocks = cycles_by_length(x);
  for (const auto& blk : blocks) {
    uint64_t l = blk[0].size(), m = blk.size();
    for (uint64_t i = 0; i < m; ++i) {
      count *= l;
      count *= (i + 1);
      if (count > (uint64_t(1) << 62)) return count;  // saturating enough
    }
  }
  return count;
}

// Visits every g in S_n with g x g^{-1} = y, deterministic order; stops when
// fn returns true. Returns whether fn accepted some candidate.
template <class F>
bool for_each_sn_conjugator(const Perm& x, const Perm& y, F&& fn) {
  auto bx = cycles_by_length(x);
  auto by = cycles_by_length(y);
  unsigned n = x.degree();
  std::vector<unsigned> img(n);

  // per block: permutation of target cycles and a rotation per source cycle
  struct BlockState {
    std::vector<size_t> assign;     // source cycle -> target cycle index
    std::vector<unsigned> rot;      // rotation offset per source cycle
  };
  std::vector<BlockState> st(bx.size());
  for (size_t b = 0; b < bx.size(); ++b) {
    st[b].assign.resize(bx[b].size());
    for (size_t i = 0; i < st[b].assign.size(); ++i) st[b].assign[i] = i;
    st[b].rot.assign(bx[b].size(), 0);
  }

  auto write_block = [&](size_t b) {
    for (size_t c = 0; c < bx[b].size(); ++c) {
      const auto& src = bx[b][c];
      const auto& dst = by[b][st[b].assign[c]];
      unsigned l = static_cast<unsigned>(src.size());
      unsigned r = st[b].rot[c];
      for (unsigned t = 0; t < l; ++t) img[src[t]] = dst[(t + r) % l];
    }
  };

  // Odometer over all blocks' (assignment, rotations).
  std::function<bool(size_t)> rec = [&](size_t b) -> bool {
    if (b == bx.size()) {
      return fn(Perm::from_images(std::vector<unsigned>(img.begin(), img.end())));
    }
    auto& s = st[b];
    std::vector<size_t> perm = s.assign;
    std::sort(perm.begin(), perm.end());
    do {
      s.assign = perm;
      unsigned l = static_cast<unsigned>(bx[b][0].size());
      size_t m = bx[b].size();
      std::vector<unsigned> rot(m, 0);
      while (true) {
        s.rot = rot;
        write_block(b);
        if (rec(b + 1)) return true;
        size_t k = 0;
        while (k < m && ++rot[k] == l) rot[k++] = 0;
        if (k == m) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  return rec(0);
}

}  // namespace detail

// Witness g with g x g^{-1} = y, or empty when x, y are not conjugate in G.
// Throws budget_error when neither strategy fits its budget.
inline std::optional<Perm> is_conjugate(const PermGroup& G, const Perm& x, const Perm& y,
                                        const ConjBudgets& budgets = {}) {
  if (x.degree() != G.degree() || y.degree() != G.degree())
    throw std::invalid_argument("is_conjugate: degree mismatch");
  if (!G.contains(x) || !G.contains(y))
    throw std::invalid_argument("is_conjugate: elements must lie in the group");
  if (x.cycle_type() != y.cycle_type()) return std::nullopt;
  if (x == y) return Perm(G.degree());

  auto cnt = detail::sn_conjugator_count(x, y);
  if (cnt && *cnt <= budgets.coset) {
    std::optional<Perm> found;
    detail::for_each_sn_conjugator(x, y, [&](const Perm& g) {
      if (G.contains(g)) {
        found = g;
        return true;
      }
      return false;
    });
    return found;
  }

  auto orbit = ConjugationOrbit::enumerate(x, G.generators(), budgets.orbit);
  if (orbit) {
    uint32_t idx = orbit->index_of(y);
    if (idx == ConjugationOrbit::kNotFound) return std::nullopt;
    return orbit->witness(idx);
  }

  throw budget_error("is_conjugate: orbit and coset budgets both exceeded");
}

namespace detail {

inline bool grow_subgroup(unsigned degree, std::vector<Perm>& gens,
                          std::optional<PermGroup>& K, const Perm& z, uint64_t target) {
  if (z.is_identity()) return false;
  if (K && K->contains(z)) return false;
  gens.push_back(z);
  K.emplace(degree, gens);
  return K->order() == target;
}

}  // namespace detail

// Stabilizer of the orbit's start point under conjugation, generated from
// Schreier generators until the orbit-stabilizer order is reached.
inline PermGroup centralizer_from_orbit(const PermGroup& G, const ConjugationOrbit& orbit) {
  uint64_t target = G.order() / orbit.size();
  std::vector<Perm> gens;
  std::optional<PermGroup> K;
  bool done = false;
  for (size_t i = 0; i < orbit.size() && !done; ++i) {
    Perm u = orbit.witness(i);
    Perm e = orbit.element(i);
    for (const Perm& g : G.generators()) {
      uint32_t j = orbit.index_of(conj_by(g, e));
      Perm z = orbit.witness(j).inverse() * (g * u);
      if (detail::grow_subgroup(G.degree(), gens, K, z, target)) {
        done = true;
        break;
      }
    }
  }
  if (!K) K.emplace(PermGroup::trivial(G.degree()));
  if (K->order() != target) throw std::logic_error("centralizer: generation failed");
  return *K;
}

// All members of C_G(s) when the S_n centralizer of s is small enough to
// enumerate; exact, deterministic order.
inline std::vector<Perm> centralizer_members_by_coset(const PermGroup& G, const Perm& s) {
  std::vector<Perm> members;
  detail::for_each_sn_conjugator(s, s, [&](const Perm& g) {
    if (G.contains(g)) members.push_back(g);
    return false;
  });
  return members;
}

// Centralizer of s in G. Strategy mirror of is_conjugate.
inline PermGroup centralizer(const PermGroup& G, const Perm& s,
                             const ConjBudgets& budgets = {}) {
  if (!G.contains(s)) throw std::invalid_argument("centralizer: s not in group");

  auto cnt = detail::sn_conjugator_count(s, s);
  if (cnt && *cnt <= budgets.coset) {
    std::vector<Perm> members = centralizer_members_by_coset(G, s);
    uint64_t target = members.size();
    std::vector<Perm> gens;
    std::optional<PermGroup> K;
    for (const Perm& z : members)
      if (detail::grow_subgroup(G.degree(), gens, K, z, target)) break;
    if (!K) K.emplace(PermGroup::trivial(G.degree()));
    if (K->order() != target) throw std::logic_error("centralizer: generation failed");
    return *K;
  }

  auto orbit = ConjugationOrbit::enumerate(s, G.generators(), budgets.orbit);
  if (orbit) return centralizer_from_orbit(G, *orbit);

  throw budget_error("centralizer: orbit and coset budgets both exceeded");
}

}  // namespace nichols
