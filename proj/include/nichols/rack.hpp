#pragma once

// Rack-theoretic layer over conjugacy classes: abelian subracks with their
// γ-matrices, families of type D_p, octahedral racks and compatible pairs of
// them, and deterministic searches for both inside a conjugacy class.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nichols/classes.hpp"
#include "nichols/group.hpp"
#include "nichols/perm.hpp"

namespace nichols {

inline bool is_abelian_subrack(const std::vector<Perm>& T) {
  for (size_t i = 0; i < T.size(); ++i)
    for (size_t j = i + 1; j < T.size(); ++j)
      if (!commute(T[i], T[j])) return false;
  return true;
}

// Abelian subrack of O_s ∩ G^s with conjugating witnesses and the matrix
// γ_{k,l} = g_l^{-1} σ_k g_l.
struct SubrackWitness {
  Perm base;                                // s
  std::vector<Perm> elements;               // σ_k
  std::vector<Perm> reps;                   // g_k with g_k ▷ s = σ_k
  std::vector<std::vector<Perm>> gammas;    // gammas[k][l] = γ_{k,l}
};

// Builds the witness for the selected members of an intersection. Indices are
// positions into intersection.members; they must pairwise commute.
inline SubrackWitness abelian_witness(const ClassIntersection& inter,
                                      const std::vector<size_t>& indices,
                                      const PermGroup& cent) {
  SubrackWitness w;
  w.base = inter.base;
  for (size_t i : indices) {
    w.elements.push_back(inter.members[i]);
    w.reps.push_back(inter.reps[i]);
  }
  if (!is_abelian_subrack(w.elements))
    throw std::invalid_argument("abelian_witness: selected members do not commute");
  size_t n = w.elements.size();
  w.gammas.assign(n, std::vector<Perm>(n));
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) {
      Perm g = w.reps[l].inverse() * w.elements[k] * w.reps[l];
      if (!cent.contains(g))
        throw std::logic_error("abelian_witness: gamma outside the centralizer");
      w.gammas[k][l] = g;
    }
  return w;
}

struct DpFamily {
  unsigned p = 0;
  std::vector<Perm> sigma;              // indexed by Z_p
  std::vector<Perm> witnesses;          // g with g ▷ s = sigma[i], for certificates
};

inline bool verify_dp(const DpFamily& fam) {
  unsigned p = fam.p;
  if (p < 2 || fam.sigma.size() != p) return false;
  for (unsigned i = 0; i < p; ++i)
    for (unsigned j = i + 1; j < p; ++j)
      if (fam.sigma[i] == fam.sigma[j]) return false;
  for (unsigned i = 0; i < p; ++i)
    for (unsigned j = 0; j < p; ++j)
      if (rack_op(fam.sigma[i], fam.sigma[j]) != fam.sigma[(2 * i + 2 * p - j) % p])
        return false;
  return true;
}

inline bool verify_dp2(const DpFamily& sig, const DpFamily& tau) {
  if (!verify_dp(sig) || !verify_dp(tau) || sig.p != tau.p) return false;
  unsigned p = sig.p;
  for (unsigned i = 0; i < p; ++i)
    for (unsigned j = 0; j < p; ++j)
      if (sig.sigma[i] == tau.sigma[j]) return false;
  for (unsigned i = 0; i < p; ++i)
    for (unsigned j = 0; j < p; ++j) {
      unsigned t = (2 * i + 2 * p - j) % p;
      if (rack_op(sig.sigma[i], tau.sigma[j]) != tau.sigma[t]) return false;
      if (rack_op(tau.sigma[i], sig.sigma[j]) != sig.sigma[t]) return false;
    }
  return true;
}

namespace rack_detail {

// Rack multiplication table of the 4-cycle class of S_4 (the octahedral rack).
inline const std::array<std::array<int, 6>, 6>& octahedral_table() {
  static const std::array<std::array<int, 6>, 6> table = [] {
    std::vector<Perm> cyc;
    for (const char* c :
         {"(1,2,3,4)", "(1,2,4,3)", "(1,3,2,4)", "(1,3,4,2)", "(1,4,2,3)", "(1,4,3,2)"})
      cyc.push_back(Perm::parse_cycles(c, 4));
    std::array<std::array<int, 6>, 6> t{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        Perm r = rack_op(cyc[i], cyc[j]);
        int k = -1;
        for (int m = 0; m < 6; ++m)
          if (cyc[m] == r) k = m;
        t[i][j] = k;
      }
    return t;
  }();
  return table;
}

// Index table of a closed sextet, or empty if not closed / not distinct.
inline std::optional<std::array<std::array<int, 6>, 6>> sextet_table(
    const std::vector<Perm>& T) {
  if (T.size() != 6) return std::nullopt;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (T[i] == T[j]) return std::nullopt;
  std::array<std::array<int, 6>, 6> t{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      Perm r = rack_op(T[i], T[j]);
      int k = -1;
      for (int m = 0; m < 6; ++m)
        if (T[m] == r) k = m;
      if (k < 0) return std::nullopt;
      t[i][j] = k;
    }
  return t;
}

}  // namespace rack_detail

// Brute-force rack isomorphism of a sextet onto the octahedral rack; returns
// the witness bijection (position i of T -> octahedral index).
inline std::optional<std::array<int, 6>> verify_type_O(const std::vector<Perm>& T) {
  auto t = rack_detail::sextet_table(T);
  if (!t) return std::nullopt;
  const auto& oct = rack_detail::octahedral_table();
  std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (int i = 0; i < 6 && ok; ++i)
      for (int j = 0; j < 6 && ok; ++j)
        if (perm[(*t)[i][j]] != oct[perm[i]][perm[j]]) ok = false;
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// A pair of compatible octahedral sextets inside one conjugacy class.
struct O2Family {
  std::array<Perm, 6> sigma, tau;
  std::array<Perm, 6> sigma_wit, tau_wit;  // conjugators from the base element
  std::optional<long long> sigma6_power;   // d with sigma[5] = sigma[0]^d
  std::optional<long long> tau1_power;     // e with tau[0] = sigma[0]^e
};

// Checks both sextets are octahedral with a common index table and the cross
// relations  σ_i ▷ τ_j = τ_{i▷j},  τ_i ▷ σ_j = σ_{i▷j}.
inline bool verify_o2(const O2Family& fam) {
  std::vector<Perm> s(fam.sigma.begin(), fam.sigma.end());
  std::vector<Perm> t(fam.tau.begin(), fam.tau.end());
  for (const Perm& a : s)
    for (const Perm& b : t)
      if (a == b) return false;
  auto ts = rack_detail::sextet_table(s);
  auto tt = rack_detail::sextet_table(t);
  if (!ts || !tt || *ts != *tt) return false;
  if (!verify_type_O(s)) return false;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int k = (*ts)[i][j];
      if (rack_op(fam.sigma[i], fam.tau[j]) != fam.tau[k]) return false;
      if (rack_op(fam.tau[i], fam.sigma[j]) != fam.sigma[k]) return false;
    }
  return true;
}

// Candidate pool for the family searches: conjugates of s over a
// breadth-first ball of generator words, members of O_s ∩ G^s, and the
// powers of s inside O_s. Deterministic order, capped size.
struct CandidatePool {
  std::vector<std::pair<Perm, Perm>> items;  // (σ, witness with witness ▷ s = σ)
  bool exhaustive = false;                   // the pool is all of O_s
};

struct SearchConfig {
  unsigned bfs_radius = 8;
  uint64_t pool_budget = uint64_t(1) << 20;
  uint64_t orbit_budget = uint64_t(1) << 23;
};

inline CandidatePool build_candidate_pool(const PermGroup& G, const Perm& s,
                                          const ClassIntersection& inter,
                                          const std::vector<std::pair<long long, Perm>>& powers,
                                          const SearchConfig& cfg) {
  CandidatePool pool;
  std::unordered_map<PackedPerm, char, PackedPermHash> seen;
  auto push = [&](const Perm& sigma, const Perm& wit) {
    if (seen.emplace(pack_perm(sigma), 1).second) pool.items.emplace_back(sigma, wit);
  };

  std::vector<Perm> step = G.generators();
  for (const Perm& g : G.generators()) {
    Perm gi = g.inverse();
    bool dup = false;
    for (const Perm& h : step) dup = dup || h == gi;
    if (!dup) step.push_back(gi);
  }

  push(s, Perm(G.degree()));
  // powers of s lying in O_s, with their conjugating witnesses
  for (const auto& [k, wit] : powers) push(s.power(k), wit);
  // intersection members
  for (size_t i = 0; i < inter.members.size(); ++i) push(inter.members[i], inter.reps[i]);
  // BFS ball of conjugates
  std::vector<std::pair<Perm, Perm>> frontier;
  frontier.emplace_back(s, Perm(G.degree()));
  for (unsigned depth = 0; depth < cfg.bfs_radius; ++depth) {
    std::vector<std::pair<Perm, Perm>> next;
    for (const auto& [sigma, wit] : frontier) {
      for (const Perm& g : step) {
        if (pool.items.size() >= cfg.pool_budget) return pool;
        Perm ns = conj_by(g, sigma);
        if (seen.emplace(pack_perm(ns), 1).second) {
          Perm nw = g * wit;
          pool.items.emplace_back(ns, nw);
          next.emplace_back(ns, nw);
        }
      }
    }
    if (next.empty()) {
      pool.exhaustive = true;  // ball closed: the whole class is covered
      break;
    }
    frontier = std::move(next);
  }
  return pool;
}

// Pool covering the entire class (used to certify exhaustive misses on the
// surviving pairs); empty when the class exceeds the orbit budget.
inline std::optional<CandidatePool> full_class_pool(const PermGroup& G, const Perm& s,
                                                    uint64_t orbit_budget) {
  auto orb = ConjugationOrbit::enumerate(s, G.generators(), orbit_budget);
  if (!orb) return std::nullopt;
  CandidatePool pool;
  pool.exhaustive = true;
  pool.items.reserve(orb->size());
  for (size_t i = 0; i < orb->size(); ++i)
    pool.items.emplace_back(orb->element(i), orb->witness(i));
  return pool;
}

struct DpSearchResult {
  std::optional<DpFamily> family;
  bool exhaustive = false;  // searched the whole class without finding one
};

// Searches for a family of type D_p inside O_s with σ_0 = s. Any family of
// type D_p meeting the class can be conjugated into this form, so an
// exhaustive pool certifies a miss.
inline DpSearchResult search_dp(const PermGroup& G, const Perm& s, unsigned p,
                                const CandidatePool& pool) {
  DpSearchResult out;
  out.exhaustive = pool.exhaustive;
  for (const auto& [cand, wit] : pool.items) {
    if (cand == s) continue;
    DpFamily fam;
    fam.p = p;
    fam.sigma = {s, cand};
    fam.witnesses = {Perm(G.degree()), wit};
    bool bad = false;
    for (unsigned i = 2; i < p; ++i) {
      Perm next = rack_op(fam.sigma[i - 1], fam.sigma[i - 2]);
      fam.sigma.push_back(next);
      fam.witnesses.push_back(fam.sigma[i - 1] * fam.witnesses[i - 2]);
      if (next == s || next == cand) {
        bad = true;
        break;
      }
    }
    if (bad) continue;
    if (verify_dp(fam)) {
      out.family = std::move(fam);
      return out;
    }
  }
  return out;
}

// Structural D_p search for classes too large to enumerate. A family of
// type D_p containing s is exactly { y^i s : i in Z_p } for an element y
// with y^p = 1, y != 1, s y s^{-1} = y^{-1} and y s in O_s: the defining
// relations give sigma_i > sigma_j = y^{2i-j} s. Such y commute with s^2,
// so enumerating the centralizer of s^2 covers the whole search space.
struct StructuredPool {
  CandidatePool pool;
  bool available = false;  // centralizer fit the enumeration budget
};

inline StructuredPool dp_pool_structured(const PermGroup& G, const Perm& s, unsigned p,
                                         const ConjBudgets& budgets, uint64_t enum_budget) {
  StructuredPool out;
  Perm s2 = s * s;
  if (s2.is_identity()) return out;
  PermGroup cent = centralizer(G, s2, budgets);
  if (cent.order() > enum_budget) return out;
  ElementTable tab(cent, enum_budget);
  std::vector<Perm> ys;
  for (uint32_t i = 0; i < tab.size(); ++i) {
    const Perm& y = tab.element(i);
    if (y.order() != p) continue;
    if (conj_by(s, y) != y.inverse()) continue;
    ys.push_back(y);
  }
  std::sort(ys.begin(), ys.end(),
            [](const Perm& a, const Perm& b) { return pack_perm(a) < pack_perm(b); });
  out.available = true;
  out.pool.exhaustive = true;
  auto type = s.cycle_type();
  for (const Perm& y : ys) {
    Perm sigma1 = y * s;
    if (sigma1.cycle_type() != type) continue;
    auto w = is_conjugate(G, s, sigma1, budgets);
    if (w) out.pool.items.emplace_back(sigma1, *w);
  }
  return out;
}

// Structural O^(2) candidate pool: conjugation by sigma_1 = s permutes the
// four sextet members outside the pair {sigma_1, sigma_6} in a 4-cycle, so
// sigma_2 centralizes s^4. Enumerating O_s inside the centralizer of s^4
// covers every candidate.
inline StructuredPool o2_pool_structured(const PermGroup& G, const Perm& s,
                                         const ConjBudgets& budgets, uint64_t enum_budget) {
  StructuredPool out;
  Perm s4 = s.power(4);
  if (s4.is_identity()) return out;
  PermGroup cent = centralizer(G, s4, budgets);
  if (cent.order() > enum_budget) return out;
  ElementTable tab(cent, enum_budget);
  std::vector<Perm> cands;
  auto type = s.cycle_type();
  for (uint32_t i = 0; i < tab.size(); ++i) {
    const Perm& m = tab.element(i);
    if (m == s || m.cycle_type() != type) continue;
    cands.push_back(m);
  }
  std::sort(cands.begin(), cands.end(),
            [](const Perm& a, const Perm& b) { return pack_perm(a) < pack_perm(b); });
  out.available = true;
  out.pool.exhaustive = true;
  for (const Perm& m : cands) {
    auto w = is_conjugate(G, s, m, budgets);
    if (w) out.pool.items.emplace_back(m, *w);
  }
  return out;
}

struct O2SearchResult {
  std::optional<O2Family> family;
  bool exhaustive = false;
};

// Searches for a family of type O^(2) with σ_1 = s: candidates σ_2 from the
// pool, σ_3..σ_5 by the conjugation chain, σ_6 from the in-class powers of s
// or σ_2 ▷ σ_3, and the τ sextet from in-class powers of the σ's or from
// their inverses in the compatible arrangement.
inline O2SearchResult search_o2(const PermGroup& G, const Perm& s,
                                const std::vector<std::pair<long long, Perm>>& powers,
                                const CandidatePool& pool) {
  O2SearchResult out;
  out.exhaustive = pool.exhaustive;
  uint64_t ord = s.order();

  for (const auto& [cand, wit2] : pool.items) {
    if (cand == s) continue;
    std::array<Perm, 6> sig;
    std::array<Perm, 6> swit;
    sig[0] = s;
    swit[0] = Perm(G.degree());
    sig[1] = cand;
    swit[1] = wit2;
    bool degenerate = false;
    for (int i = 2; i <= 4; ++i) {
      sig[i] = rack_op(sig[i - 1], sig[0]);
      swit[i] = sig[i - 1];  // sig[i] = sig[i-1] ▷ s
      for (int j = 0; j < i; ++j) degenerate = degenerate || sig[i] == sig[j];
      if (degenerate) break;
    }
    if (degenerate) continue;

    // closure prefilter: σ_1 ▷ σ_2 must land inside the sextet
    Perm t0 = rack_op(sig[0], sig[1]);
    bool t0_known = false;
    for (int j = 0; j < 5; ++j) t0_known = t0_known || t0 == sig[j];

    // σ_6 candidates: powers of s in the class, then σ_2 ▷ σ_3
    std::vector<std::pair<Perm, Perm>> six;
    for (const auto& [k, wit] : powers)
      if (k != 1) six.emplace_back(s.power(k), wit);
    // σ_3 = w ▷ s with w = swit[2], so σ_2 ▷ σ_3 = (σ_2 w) ▷ s
    six.emplace_back(rack_op(sig[1], sig[2]), sig[1] * swit[2]);

    for (const auto& [s6, wit6] : six) {
      bool clash = false;
      for (int j = 0; j < 5; ++j) clash = clash || s6 == sig[j];
      if (clash) continue;
      if (!t0_known && t0 != s6) continue;
      sig[5] = s6;
      swit[5] = wit6;

      // τ options: σ_l^e for in-class exponents e, and the inverse pattern
      std::vector<std::pair<long long, bool>> tau_opts;  // (e, is_power_pattern)
      for (const auto& [k, wit] : powers) {
        (void)wit;
        if (k != 1) tau_opts.emplace_back(k, true);
      }
      tau_opts.emplace_back(-1, false);

      for (auto [e, is_power] : tau_opts) {
        O2Family fam;
        fam.sigma = sig;
        fam.sigma_wit = swit;
        if (is_power) {
          // witness: σ_l^e = (w_l g_e) ▷ s where g_e ▷ s = s^e
          Perm ge;
          bool have = false;
          for (const auto& [k, wit] : powers)
            if (k == e) {
              ge = wit;
              have = true;
            }
          if (!have) continue;
          for (int l = 0; l < 6; ++l) {
            fam.tau[l] = fam.sigma[l].power(e);
            fam.tau_wit[l] = fam.sigma_wit[l] * ge;
          }
        } else {
          // inverses, rearranged compatibly: τ = (σ6^-1, σ4^-1, σ5^-1,
          // σ2^-1, σ3^-1, σ1^-1)
          long long kinv = -1;
          Perm ginv;
          bool have = false;
          for (const auto& [k, wit] : powers)
            if ((k + 1) % static_cast<long long>(ord) == 0) {
              ginv = wit;
              have = true;
              kinv = k;
            }
          (void)kinv;
          if (!have) continue;
          static const int arrangement[6] = {5, 3, 4, 1, 2, 0};
          for (int l = 0; l < 6; ++l) {
            int src = arrangement[l];
            fam.tau[l] = fam.sigma[src].inverse();
            fam.tau_wit[l] = fam.sigma_wit[src] * ginv;
          }
        }
        if (!verify_o2(fam)) continue;

        // record power relations for the special-case lemma
        for (long long d = 1; d < static_cast<long long>(ord); ++d) {
          if (fam.sigma[5] == s.power(d)) fam.sigma6_power = d;
          if (fam.tau[0] == s.power(d)) fam.tau1_power = d;
        }
        out.family = std::move(fam);
        return out;
      }
    }
  }
  return out;
}

}  // namespace nichols
