#pragma once

// The classification pipeline. For every pair (conjugacy class O_s,
// irreducible centralizer representation ρ) the rules run in a fixed order:
//
//   1. identity class            -> infinite
//   2. real class, q_ss != -1    -> infinite
//   3. in-class power of s       -> infinite (scalar conditions)
//   4. abelian subracks of O_s ∩ G^s: an exact q-matrix (deg 1) or the
//      character-constrained joint-eigenvalue reasoner (deg > 1) producing a
//      diagonal subspace of non-finite Cartan type or with a cycle/valency
//      obstruction                -> infinite
//   5. negative-braiding verification (deg 1)
//   6. non-abelian stage on the negatives: D_p families and O^(2) pairs
//
// Every infinite verdict carries a certificate that re-verifies from raw
// group data without trusting the search.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/chartab.hpp"
#include "nichols/classes.hpp"
#include "nichols/rack.hpp"

namespace nichols {

enum class Outcome { Infinite, NegativeBraiding, Unknown };
enum class Stage { Abelian, NonAbelian };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Infinite: return "infinite";
    case Outcome::NegativeBraiding: return "negative";
    default: return "unknown";
  }
}
inline const char* stage_name(Stage s) {
  return s == Stage::Abelian ? "abelian" : "nonabelian";
}

struct CertIdentity {};

struct CertRealScalar {
  Perm witness;  // w ▷ s = s^{-1}
};

struct CertPowerScalar {
  long long k = 0;
  Perm witness;  // w ▷ s = s^k
};

// Degree-1 abelian certificate: an explicit diagonal subspace.
struct CertDiagonalSubspace {
  SubrackWitness witness;
  DiagonalBraiding qmat;
  std::optional<CartanMatrix> cartan;          // set for the Cartan route
  std::optional<HeckeObstruction> obstruction;  // set for the cycle/valency route
};

// Degree > 1 abelian certificate: subset + commuting family; the verifier
// reruns the joint-eigenvalue analysis from raw data.
struct CertJointEigen {
  SubrackWitness witness;
  std::vector<Perm> family;  // the σ's and all γ values, deduplicated
};

struct CertDp {
  unsigned p = 0;
  long long power_k = 1;  // s^k ∈ O_s backing the hypothesis; k = 1 always holds
  DpFamily family;
};

struct CertO2Special {
  O2Family family;
  long long d = 0, e = 0;
};

struct CertO2General {
  O2Family family;
  Perm conjugator;  // g with g ▷ σ_1 = τ_1
};

using Certificate = std::variant<CertIdentity, CertRealScalar, CertPowerScalar,
                                 CertDiagonalSubspace, CertJointEigen, CertDp,
                                 CertO2Special, CertO2General>;

inline const char* certificate_name(const Certificate& c) {
  struct V {
    const char* operator()(const CertIdentity&) { return "identity-class"; }
    const char* operator()(const CertRealScalar&) { return "real-scalar"; }
    const char* operator()(const CertPowerScalar&) { return "power-scalar"; }
    const char* operator()(const CertDiagonalSubspace& d) {
      return d.cartan ? "cartan-subspace" : "hecke-obstruction";
    }
    const char* operator()(const CertJointEigen&) { return "joint-eigen"; }
    const char* operator()(const CertDp&) { return "dp-family"; }
    const char* operator()(const CertO2Special&) { return "o2-special"; }
    const char* operator()(const CertO2General&) { return "o2-general"; }
  };
  return std::visit(V{}, c);
}

struct Verdict {
  std::string group;
  unsigned class_label = 0;
  size_t irrep = 0;           // row index in the centralizer table
  uint64_t degree = 0;        // 0 when no table is available (identity class)
  std::optional<Cyclotomic> qss;
  Outcome outcome = Outcome::Unknown;
  Stage stage = Stage::Abelian;
  std::optional<Certificate> certificate;
  bool search_exhausted = true;  // non-abelian searches covered their space
  std::vector<std::string> trace;
};

struct CriteriaConfig {
  uint64_t enum_budget = 100000;
  ConjBudgets conj;
  SearchConfig search;
  uint64_t subset_budget = 2000000;      // abelian subsets examined per pair
  uint64_t assignment_budget = 200000;   // joint eigenvalue assignments per subset
  unsigned max_subset = 4;
  bool joint_nonabelian = false;  // deg > 1 branch of the O^(2) lemma (unused here)
};

// Precomputed per-class data shared by all pairs of the class.
struct ClassAnalysis {
  ConjClass cls;
  bool identity = false;
  std::shared_ptr<CharacterTable> table;  // null for the identity class
  std::optional<ClassIntersection> inter;
  bool real = false;
  Perm real_witness;
  std::vector<std::pair<long long, Perm>> in_class_powers;  // k in 2..ord-1
  size_t pair_count = 0;
};

inline ClassAnalysis analyze_class(const PermGroup& G, const ConjClass& cls,
                                   size_t group_class_count, const CriteriaConfig& cfg) {
  ClassAnalysis a;
  a.cls = cls;
  if (cls.rep.is_identity()) {
    a.identity = true;
    a.pair_count = group_class_count;
    return a;
  }
  a.table = std::make_shared<CharacterTable>(burnside_dixon(cls.centralizer, cfg.enum_budget));
  a.pair_count = a.table->irrep_count();

  ClassConfig ccfg;
  ccfg.enum_budget = cfg.enum_budget;
  ccfg.conj = cfg.conj;
  a.inter = class_meet_centralizer(G, cls.rep, cls.centralizer, ccfg);

  auto rw = is_conjugate(G, cls.rep, cls.rep.inverse(), cfg.conj);
  a.real = rw.has_value();
  if (rw) a.real_witness = *rw;

  uint64_t ord = cls.rep.order();
  for (long long k = 2; k < static_cast<long long>(ord); ++k) {
    auto w = is_conjugate(G, cls.rep, cls.rep.power(k), cfg.conj);
    if (w) a.in_class_powers.emplace_back(k, *w);
  }
  return a;
}

namespace criteria_detail {

inline bool in_g3_nontrivial(const Cyclotomic& q) {
  auto r = q.as_root_of_unity();
  return r && r->first == 3;
}

// ---- joint eigenvalue reasoner (deg > 1) --------------------------------

struct JointProblem {
  // family[0] is always s itself
  std::vector<Perm> family;
  std::vector<unsigned> order;                       // |family[i]|
  std::vector<std::map<unsigned, uint64_t>> mults;   // eigenvalue multisets
  // tuple-forcing: family[i] = s^c  =>  eigenvalue fixed to qss^c
  std::vector<std::optional<long long>> power_of_s;
  // pair products: family[a] * family[b] = s^c
  std::vector<std::tuple<size_t, size_t, long long>> pair_products;
  uint64_t dim = 0;
  Cyclotomic qss;
  // braiding lookup: gamma_index[k][l] = family index of γ_{k,l}
  std::vector<std::vector<size_t>> gamma_index;
  size_t theta = 0;  // subset size
};

// Builds the joint problem for a witness subset; empty if the family does
// not commute pairwise (no joint eigenbasis).
inline std::optional<JointProblem> build_joint_problem(const SubrackWitness& w,
                                                       const CharacterTable& table,
                                                       size_t irrep, const Perm& s) {
  JointProblem jp;
  jp.theta = w.elements.size();
  jp.dim = table.degree(irrep);
  jp.qss = table.q_scalar(irrep, s);

  auto family_index = [&](const Perm& x) -> size_t {
    for (size_t i = 0; i < jp.family.size(); ++i)
      if (jp.family[i] == x) return i;
    jp.family.push_back(x);
    return jp.family.size() - 1;
  };
  family_index(s);
  for (const Perm& e : w.elements) family_index(e);
  jp.gamma_index.assign(jp.theta, std::vector<size_t>(jp.theta));
  for (size_t k = 0; k < jp.theta; ++k)
    for (size_t l = 0; l < jp.theta; ++l) jp.gamma_index[k][l] = family_index(w.gammas[k][l]);

  if (!is_abelian_subrack(jp.family)) return std::nullopt;

  uint64_t sord = s.order();
  for (const Perm& m : jp.family) {
    jp.order.push_back(static_cast<unsigned>(m.order()));
    jp.mults.push_back(table.eigenvalue_multiset(irrep, m));
    // is m a power of s?
    std::optional<long long> pw;
    Perm acc = s;
    for (uint64_t c = 1; c <= sord; ++c, acc = acc * s)
      if (m == acc) {
        pw = static_cast<long long>(c);
        break;
      }
    jp.power_of_s.push_back(pw);
  }
  for (size_t a = 0; a < jp.family.size(); ++a)
    for (size_t b = a; b < jp.family.size(); ++b) {
      Perm prod = jp.family[a] * jp.family[b];
      Perm acc(s.degree());
      for (uint64_t c = 0; c < sord; ++c, acc = acc * s)
        if (prod == acc) {
          jp.pair_products.emplace_back(a, b, static_cast<long long>(c));
          break;
        }
    }
  return jp;
}

// A joint tuple assigns an eigenvalue exponent to every family member.
struct TupleSpace {
  std::vector<std::vector<unsigned>> tuples;  // exponent per family member
};

inline TupleSpace enumerate_tuples(const JointProblem& jp) {
  TupleSpace ts;
  size_t n = jp.family.size();
  std::vector<unsigned> cur(n, 0);
  // precompute allowed exponents per member
  std::vector<std::vector<unsigned>> allowed(n);
  for (size_t i = 0; i < n; ++i)
    for (const auto& [j, m] : jp.mults[i]) allowed[i].push_back(j);

  std::function<bool(size_t)> consistent = [&](size_t upto) -> bool {
    // forced powers of s
    for (size_t i = 0; i < upto; ++i) {
      if (jp.power_of_s[i]) {
        // eigenvalue must be qss^c
        Cyclotomic want = Cyclotomic(1);
        Cyclotomic q = jp.qss;
        long long c = *jp.power_of_s[i] % static_cast<long long>(jp.family[0].order());
        for (long long t = 0; t < c; ++t) want = want * q;
        if (Cyclotomic::root(jp.order[i], cur[i]) != want) return false;
      }
    }
    for (const auto& [a, b, c] : jp.pair_products) {
      if (a >= upto || b >= upto) continue;
      Cyclotomic want(1);
      for (long long t = 0; t < c; ++t) want = want * jp.qss;
      if (Cyclotomic::root(jp.order[a], cur[a]) * Cyclotomic::root(jp.order[b], cur[b]) != want)
        return false;
    }
    return true;
  };

  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == n) {
      ts.tuples.push_back(cur);
      return;
    }
    for (unsigned e : allowed[i]) {
      cur[i] = e;
      if (consistent(i + 1)) rec(i + 1);
    }
  };
  rec(0);
  return ts;
}

// Enumerates multiplicity vectors over the tuple space matching every
// member's eigenvalue multiset; calls fn for each. Returns false when the
// assignment budget was exhausted.
template <class F>
inline bool enumerate_assignments(const JointProblem& jp, const TupleSpace& ts, uint64_t budget,
                                  F&& fn) {
  size_t cells = ts.tuples.size();
  size_t n = jp.family.size();
  std::vector<uint64_t> count(cells, 0);
  // remaining capacity per (member, exponent)
  std::vector<std::map<unsigned, uint64_t>> remaining = jp.mults;
  uint64_t budget_left = budget;

  std::function<bool(size_t, uint64_t)> rec = [&](size_t cell, uint64_t placed) -> bool {
    if (budget_left == 0) return false;
    if (cell == cells) {
      if (placed != jp.dim) return true;
      for (size_t i = 0; i < n; ++i)
        for (const auto& [e, m] : remaining[i])
          if (m != 0) return true;
      --budget_left;
      fn(count);
      return true;
    }
    // max copies of this tuple limited by every member's remaining capacity
    uint64_t maxc = jp.dim - placed;
    for (size_t i = 0; i < n && maxc; ++i) {
      auto it = remaining[i].find(ts.tuples[cell][i]);
      uint64_t cap = (it == remaining[i].end()) ? 0 : it->second;
      maxc = std::min(maxc, cap);
    }
    for (uint64_t c = 0; c <= maxc; ++c) {
      if (c > 0)
        for (size_t i = 0; i < n; ++i) remaining[i][ts.tuples[cell][i]] -= 1;
      count[cell] = c;
      if (!rec(cell + 1, placed + c)) return false;
    }
    for (uint64_t c = 0; c < maxc; ++c)
      for (size_t i = 0; i < n; ++i) remaining[i][ts.tuples[cell][i]] += 1;
    count[cell] = 0;
    return true;
  };
  return rec(0, 0);
}

// Diagonal braiding of the expanded vertex set for one assignment; vertices
// are (subset position k, tuple cell) with multiplicity capped at 4.
struct ExpandedSpace {
  DiagonalBraiding braiding;
  std::vector<std::pair<size_t, size_t>> vertex;  // (k, cell)
};

inline ExpandedSpace expand_assignment(const JointProblem& jp, const TupleSpace& ts,
                                       const std::vector<uint64_t>& count) {
  ExpandedSpace ex;
  for (size_t k = 0; k < jp.theta; ++k)
    for (size_t cell = 0; cell < ts.tuples.size(); ++cell) {
      uint64_t copies = std::min<uint64_t>(count[cell], 4);
      for (uint64_t c = 0; c < copies; ++c) ex.vertex.emplace_back(k, cell);
    }
  size_t n = ex.vertex.size();
  ex.braiding.q.assign(n, std::vector<Cyclotomic>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      auto [k, cell_a] = ex.vertex[a];
      auto [l, cell_b] = ex.vertex[b];
      size_t gi = jp.gamma_index[k][l];
      // c(e_a ⊗ e_b): scalar is the eigenvalue of γ_{k,l} on the vector of b
      ex.braiding.q[a][b] = Cyclotomic::root(jp.order[gi], ts.tuples[cell_b][gi]);
    }
  return ex;
}

// True when the diagonal space contains an infinite-dimensional diagonal
// subspace: a <=4 subset of non-finite Cartan type, or a cycle/valency
// obstruction of the full diagram.
inline bool expanded_obstructed(const DiagonalBraiding& b) {
  GDD g = gdd(b);
  bool roots_ok = true;
  for (const auto& v : g.vertex)
    if (!v.as_root_of_unity()) roots_ok = false;
  if (roots_ok && hecke_obstruction(g)) return true;

  size_t n = b.dim();
  std::vector<size_t> subset;
  std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t want) -> bool {
    if (subset.size() == want) {
      DiagonalBraiding sub;
      sub.q.assign(want, std::vector<Cyclotomic>(want));
      for (size_t i = 0; i < want; ++i)
        for (size_t j = 0; j < want; ++j) sub.q[i][j] = b.q[subset[i]][subset[j]];
      auto cm = cartan_data(sub);
      return cm && !is_finite_type(*cm);
    }
    for (size_t i = start; i < n; ++i) {
      subset.push_back(i);
      if (rec(i + 1, want)) return true;
      subset.pop_back();
    }
    return false;
  };
  for (size_t want = 2; want <= std::min<size_t>(4, n); ++want)
    if (rec(0, want)) return true;
  return false;
}

// Full joint analysis for one subset: fires only when every consistent
// assignment is obstructed. Returns false on any budget overrun.
inline std::optional<bool> joint_analysis_fires(const JointProblem& jp, uint64_t budget) {
  TupleSpace ts = enumerate_tuples(jp);
  if (ts.tuples.empty()) return false;
  bool all_obstructed = true;
  bool any = false;
  bool complete = enumerate_assignments(jp, ts, budget, [&](const std::vector<uint64_t>& count) {
    any = true;
    if (!all_obstructed) return;
    ExpandedSpace ex = expand_assignment(jp, ts, count);
    if (!expanded_obstructed(ex.braiding)) all_obstructed = false;
  });
  if (!complete) return std::nullopt;  // budget exhausted: inconclusive
  return any && all_obstructed;
}

}  // namespace criteria_detail

// ---- the per-pair pipeline -------------------------------------------------

inline std::optional<Certificate> rule_identity(const ClassAnalysis& a) {
  if (a.identity) return Certificate{CertIdentity{}};
  return std::nullopt;
}

inline std::optional<Certificate> rule_real(const ClassAnalysis& a, const Cyclotomic& qss) {
  if (a.real && qss != Cyclotomic(-1)) return Certificate{CertRealScalar{a.real_witness}};
  return std::nullopt;
}

inline std::optional<Certificate> rule_power(const ClassAnalysis& a, uint64_t degree,
                                             const Cyclotomic& qss) {
  uint64_t ord = a.cls.rep.order();
  for (const auto& [k, wit] : a.in_class_powers) {
    bool fires = false;
    if (degree > 1 && qss != Cyclotomic(-1)) fires = true;
    if (degree == 1 && qss != Cyclotomic(-1) && !criteria_detail::in_g3_nontrivial(qss))
      fires = true;
    if ((k * k) % static_cast<long long>(ord) != 1 && qss != Cyclotomic(-1)) fires = true;
    if (fires) return Certificate{CertPowerScalar{k, wit}};
  }
  return std::nullopt;
}

// True iff ρ(γ_{1,t} γ_{t,1}) = 1 for every σ_t in O_s ∩ G^s (degree 1 and
// q_ss = -1 are assumed by the caller).
inline bool negative_check(const ClassAnalysis& a, size_t irrep) {
  const auto& inter = *a.inter;
  const CharacterTable& t = *a.table;
  for (size_t i = 1; i < inter.members.size(); ++i) {
    Perm gamma_1t = inter.reps[i].inverse() * inter.base * inter.reps[i];
    Perm prod = gamma_1t * inter.members[i];
    if (t.character_at(irrep, prod) != Cyclotomic(1)) return false;
  }
  return true;
}

// Deterministic subset enumeration over the intersection: sizes 2..max, only
// pairwise-commuting subsets, lexicographic order, bounded count.
inline std::optional<Certificate> abelian_search(const ClassAnalysis& a, size_t irrep,
                                                 const CriteriaConfig& cfg) {
  const auto& inter = *a.inter;
  const CharacterTable& table = *a.table;
  uint64_t degree = table.degree(irrep);
  size_t n = inter.members.size();

  std::vector<std::vector<char>> comm(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      comm[i][j] = comm[j][i] = commute(inter.members[i], inter.members[j]) ? 1 : 0;

  uint64_t examined = 0;
  std::vector<size_t> subset;
  std::optional<Certificate> found;

  std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t want) -> bool {
    if (subset.size() == want) {
      if (++examined > cfg.subset_budget) return false;
      SubrackWitness w = abelian_witness(inter, subset, a.cls.centralizer);
      if (degree == 1) {
        DiagonalBraiding b = braiding_from_witness(w, table, irrep);
        auto cm = cartan_data(b);
        if (cm && !is_finite_type(*cm)) {
          found = Certificate{CertDiagonalSubspace{w, b, cm, std::nullopt}};
          return false;
        }
        GDD g = gdd(b);
        bool roots = true;
        for (const auto& v : g.vertex)
          if (!v.as_root_of_unity()) roots = false;
        if (roots) {
          auto ob = hecke_obstruction(g);
          if (ob) {
            found = Certificate{CertDiagonalSubspace{w, b, std::nullopt, ob}};
            return false;
          }
        }
      } else {
        auto jp = criteria_detail::build_joint_problem(w, table, irrep, inter.base);
        if (jp) {
          auto fires = criteria_detail::joint_analysis_fires(*jp, cfg.assignment_budget);
          if (fires && *fires) {
            found = Certificate{CertJointEigen{w, jp->family}};
            return false;
          }
        }
      }
      return true;
    }
    for (size_t i = start; i < n; ++i) {
      bool ok = true;
      for (size_t j : subset) ok = ok && comm[i][j];
      if (!ok) continue;
      subset.push_back(i);
      if (!rec(i + 1, want)) return false;
      subset.pop_back();
    }
    return true;
  };

  for (size_t want = 2; want <= cfg.max_subset && !found; ++want) {
    subset.clear();
    if (!rec(0, want) && found) break;
  }
  return found;
}

// Non-abelian data computed once per class that reached the negative stage.
struct NonAbelianData {
  std::optional<DpFamily> dp;
  unsigned dp_p = 0;
  std::optional<O2Family> o2;
  std::optional<Perm> o2_conjugator;  // g ▷ σ_1 = τ_1 when found
  bool exhaustive = true;
};

inline NonAbelianData nonabelian_search(const PermGroup& G, const ClassAnalysis& a,
                                        const CriteriaConfig& cfg) {
  NonAbelianData out;
  const Perm& s = a.cls.rep;

  // one shared pool when the whole class is materializable
  std::optional<CandidatePool> full;
  if (a.cls.size <= cfg.search.orbit_budget)
    full = full_class_pool(G, s, cfg.search.orbit_budget);

  bool dp_exhaustive = true;
  for (unsigned p : {3u, 5u, 7u}) {
    DpSearchResult res;
    if (full) {
      res = search_dp(G, s, p, *full);
    } else {
      StructuredPool sp = dp_pool_structured(G, s, p, cfg.conj, cfg.enum_budget);
      if (sp.available) {
        res = search_dp(G, s, p, sp.pool);
      } else {
        CandidatePool ball = build_candidate_pool(G, s, *a.inter, a.in_class_powers, cfg.search);
        res = search_dp(G, s, p, ball);
      }
    }
    dp_exhaustive = dp_exhaustive && res.exhaustive;
    if (res.family) {
      out.dp = std::move(res.family);
      out.dp_p = p;
      out.exhaustive = true;
      return out;
    }
  }

  O2SearchResult res;
  if (full) {
    res = search_o2(G, s, a.in_class_powers, *full);
  } else {
    StructuredPool sp = o2_pool_structured(G, s, cfg.conj, cfg.enum_budget);
    if (sp.available) {
      res = search_o2(G, s, a.in_class_powers, sp.pool);
    } else {
      CandidatePool ball = build_candidate_pool(G, s, *a.inter, a.in_class_powers, cfg.search);
      res = search_o2(G, s, a.in_class_powers, ball);
    }
  }
  out.exhaustive = dp_exhaustive && res.exhaustive;
  if (res.family) {
    out.o2 = std::move(res.family);
    auto g = is_conjugate(G, out.o2->sigma[0], out.o2->tau[0], cfg.conj);
    if (g) out.o2_conjugator = *g;
  }
  return out;
}

// Stages 1-5: everything up to and including the negative-braiding
// verification. Negatives keep stage = Abelian until the non-abelian stage
// has run on them.
inline Verdict classify_pair_abelian(const std::string& group_name, const ClassAnalysis& a,
                                     size_t irrep, const CriteriaConfig& cfg) {
  Verdict v;
  v.group = group_name;
  v.class_label = a.cls.label;
  v.irrep = irrep;

  auto record = [&](const std::string& line) { v.trace.push_back(line); };

  if (auto c = rule_identity(a)) {
    v.outcome = Outcome::Infinite;
    v.stage = Stage::Abelian;
    v.certificate = c;
    record("rule identity-class: fires");
    return v;
  }

  const CharacterTable& table = *a.table;
  v.degree = table.degree(irrep);
  Cyclotomic qss = table.q_scalar(irrep, a.cls.rep);
  v.qss = qss;
  record("qss = " + qss.to_string());

  if (auto c = rule_real(a, qss)) {
    v.outcome = Outcome::Infinite;
    v.stage = Stage::Abelian;
    v.certificate = c;
    record("rule real-scalar: fires");
    return v;
  }
  record(a.real ? "rule real-scalar: passes (qss = -1)" : "rule real-scalar: class not real");

  if (auto c = rule_power(a, v.degree, qss)) {
    v.outcome = Outcome::Infinite;
    v.stage = Stage::Abelian;
    v.certificate = c;
    record("rule power-scalar: fires with k = " +
           std::to_string(std::get<CertPowerScalar>(*c).k));
    return v;
  }
  record("rule power-scalar: passes");

  if (v.degree == 1 && qss == Cyclotomic(-1) && negative_check(a, irrep)) {
    v.outcome = Outcome::NegativeBraiding;
    v.stage = Stage::Abelian;
    record("negative braiding verified over " + std::to_string(a.inter->members.size()) +
           " intersection members");
    return v;
  }

  if (auto c = abelian_search(a, irrep, cfg)) {
    v.outcome = Outcome::Infinite;
    v.stage = Stage::Abelian;
    v.certificate = c;
    record(std::string("abelian subrack search: fires (") + certificate_name(*c) + ")");
    return v;
  }
  record("abelian subrack search: no certificate");
  v.outcome = Outcome::Unknown;
  v.stage = Stage::Abelian;
  return v;
}

// Stage 6 on a verified negative pair.
inline void apply_nonabelian(Verdict& v, const ClassAnalysis& a, const NonAbelianData& nad) {
  if (v.outcome != Outcome::NegativeBraiding) return;
  const CharacterTable& table = *a.table;
  auto record = [&](const std::string& line) { v.trace.push_back(line); };

  v.stage = Stage::NonAbelian;
  v.search_exhausted = nad.exhaustive;
  if (nad.dp) {
    v.outcome = Outcome::Infinite;
    v.certificate = Certificate{CertDp{nad.dp_p, 1, *nad.dp}};
    record("nonabelian stage: D_" + std::to_string(nad.dp_p) + " family, k = 1");
    return;
  }
  if (nad.o2) {
    const O2Family& fam = *nad.o2;
    if (fam.sigma6_power && fam.tau1_power) {
      v.outcome = Outcome::Infinite;
      v.certificate = Certificate{CertO2Special{fam, *fam.sigma6_power, *fam.tau1_power}};
      record("nonabelian stage: O^(2) family with power relations");
      return;
    }
    if (v.degree == 1 && nad.o2_conjugator) {
      const Perm& g = *nad.o2_conjugator;
      const PermGroup& cent = a.cls.centralizer;
      Perm c1 = g.inverse() * fam.sigma[0] * g;
      Perm c6 = g.inverse() * fam.sigma[5] * g;
      bool in_cent = cent.contains(fam.sigma[5]) && cent.contains(fam.tau[0]) &&
                     cent.contains(c1) && cent.contains(c6);
      if (in_cent && table.character_at(v.irrep, fam.sigma[5]) == Cyclotomic(-1) &&
          table.character_at(v.irrep, fam.tau[0]) == Cyclotomic(-1) &&
          table.character_at(v.irrep, c1) == Cyclotomic(-1) &&
          table.character_at(v.irrep, c6) == Cyclotomic(-1)) {
        v.outcome = Outcome::Infinite;
        v.certificate = Certificate{CertO2General{fam, g}};
        record("nonabelian stage: O^(2) family via the eigenvector conditions");
        return;
      }
    }
    record("nonabelian stage: O^(2) family found but no lemma applies");
    return;
  }
  record(nad.exhaustive ? "nonabelian stage: no family in the whole class"
                        : "nonabelian stage: no family within the search budget");
}

}  // namespace nichols
