#pragma once

// Conjugacy classes of a permutation group: exact census via full enumeration
// for small groups, seeded random sampling with power closure for large ones.
// Also class/centralizer intersections with conjugating witnesses.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nichols/conjugacy.hpp"
#include "nichols/elements.hpp"
#include "nichols/group.hpp"
#include "nichols/orbit.hpp"
#include "nichols/perm.hpp"

namespace nichols {

struct ClassConfig {
  uint64_t enum_budget = 100000;  // full-enumeration threshold
  ConjBudgets conj;
  uint64_t seed = 0x6d617468u;  // census sampling seed
  uint64_t max_samples = 200000;
};

struct ConjClass {
  Perm rep;
  uint64_t size = 0;
  PermGroup centralizer;
  unsigned label = 0;  // position in the deterministic ordering, 1-based

  // Materialized conjugation orbit when it fit the budget (may be null).
  std::shared_ptr<const ConjugationOrbit> orbit;

  uint64_t rep_order() const { return rep.order(); }
};

namespace detail {

inline bool conjugate_to(const PermGroup& G, const ConjClass& cls, const Perm& c,
                         const ConjBudgets& budgets) {
  if (cls.rep.cycle_type() != c.cycle_type()) return false;
  if (cls.orbit) return cls.orbit->contains(c);
  return is_conjugate(G, cls.rep, c, budgets).has_value();
}

inline ConjClass make_class(const PermGroup& G, const Perm& rep, const ConjBudgets& budgets) {
  ConjClass cls{rep, 0, PermGroup::trivial(G.degree()), 0, nullptr};
  auto cnt = detail::sn_conjugator_count(rep, rep);
  if (cnt && *cnt <= budgets.coset) {
    cls.centralizer = centralizer(G, rep, budgets);
  } else {
    auto orb = ConjugationOrbit::enumerate(rep, G.generators(), budgets.orbit);
    if (!orb) throw budget_error("conjugacy_classes: class beyond orbit and coset budgets");
    cls.orbit = std::make_shared<const ConjugationOrbit>(std::move(*orb));
    cls.centralizer = centralizer_from_orbit(G, *cls.orbit);
  }
  cls.size = G.order() / cls.centralizer.order();
  return cls;
}

}  // namespace detail

// Complete, duplicate-free class list; sizes sum to |G|; deterministic order
// (element order, then class size, then packed representative).
inline std::vector<ConjClass> conjugacy_classes(const PermGroup& G,
                                                const ClassConfig& cfg = {}) {
  std::vector<ConjClass> classes;

  if (G.order() <= cfg.enum_budget) {
    ElementTable tab(G, cfg.enum_budget);
    for (uint32_t c = 0; c < tab.class_count(); ++c) {
      ConjClass cls{tab.class_rep(c), tab.class_size(c), PermGroup::trivial(G.degree()), 0,
                    nullptr};
      cls.centralizer = centralizer(G, cls.rep, cfg.conj);
      if (cls.centralizer.order() * cls.size != G.order())
        throw std::logic_error("conjugacy_classes: orbit-stabilizer violated");
      classes.push_back(std::move(cls));
    }
  } else {
    Rng rng(cfg.seed);
    uint64_t covered = 0;
    uint64_t samples = 0;
    while (covered < G.order()) {
      if (++samples > cfg.max_samples)
        throw budget_error("conjugacy_classes: sampling budget exhausted");
      Perm z = G.random_element(rng);
      uint64_t ord = z.order();
      Perm cand = z;
      for (uint64_t e = 1; e <= ord; ++e, cand = cand * z) {
        bool known = false;
        for (const ConjClass& cls : classes)
          if (detail::conjugate_to(G, cls, cand, cfg.conj)) {
            known = true;
            break;
          }
        if (known) continue;
        classes.push_back(detail::make_class(G, cand, cfg.conj));
        covered += classes.back().size;
      }
    }
  }

  std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    uint64_t oa = a.rep.order(), ob = b.rep.order();
    if (oa != ob) return oa < ob;
    if (a.size != b.size) return a.size < b.size;
    return pack_perm(a.rep) < pack_perm(b.rep);
  });
  for (size_t i = 0; i < classes.size(); ++i) classes[i].label = static_cast<unsigned>(i + 1);

  uint64_t total = 0;
  for (const ConjClass& c : classes) total += c.size;
  if (total != G.order()) throw std::logic_error("conjugacy_classes: sizes do not sum to |G|");
  return classes;
}

inline bool is_real_class(const PermGroup& G, const Perm& s, const ConjBudgets& budgets = {}) {
  return is_conjugate(G, s, s.inverse(), budgets).has_value();
}

// O_s ∩ G^s with conjugating witnesses g_t ▷ s = σ_t and g_1 = id.
struct ClassIntersection {
  Perm base;                  // σ_1 = s
  std::vector<Perm> members;  // σ_t, members[0] == base
  std::vector<Perm> reps;     // g_t, reps[0] == identity
};

inline ClassIntersection class_meet_centralizer(const PermGroup& G, const Perm& s,
                                                const PermGroup& cent,
                                                const ClassConfig& cfg = {}) {
  ClassIntersection out;
  out.base = s;
  out.members.push_back(s);
  out.reps.push_back(Perm(G.degree()));

  ElementTable tab(cent, cfg.enum_budget);

  // Candidates in canonical order: same cycle type, not s itself.
  std::vector<Perm> cands;
  auto type = s.cycle_type();
  for (uint32_t i = 0; i < tab.size(); ++i) {
    const Perm& m = tab.element(i);
    if (m == s || m.cycle_type() != type) continue;
    cands.push_back(m);
  }
  std::sort(cands.begin(), cands.end(),
            [](const Perm& a, const Perm& b) { return pack_perm(a) < pack_perm(b); });

  // Shared orbit when it fits; otherwise per-candidate coset search.
  std::shared_ptr<const ConjugationOrbit> orbit;
  auto cnt = detail::sn_conjugator_count(s, s);
  if (!(cnt && *cnt <= cfg.conj.coset)) {
    auto orb = ConjugationOrbit::enumerate(s, G.generators(), cfg.conj.orbit);
    if (!orb) throw budget_error("class_meet_centralizer: orbit budget exceeded");
    orbit = std::make_shared<const ConjugationOrbit>(std::move(*orb));
  }

  for (const Perm& m : cands) {
    if (orbit) {
      uint32_t idx = orbit->index_of(m);
      if (idx == ConjugationOrbit::kNotFound) continue;
      out.members.push_back(m);
      out.reps.push_back(orbit->witness(idx));
    } else {
      auto g = is_conjugate(G, s, m, cfg.conj);
      if (!g) continue;
      out.members.push_back(m);
      out.reps.push_back(*g);
    }
  }
  return out;
}

}  // namespace nichols
