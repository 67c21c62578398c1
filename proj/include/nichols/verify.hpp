#pragma once

// Independent certificate verification: every relation a certificate cites
// is recomputed from raw group data. A failure names the first violated
// relation.

#include "nichols/trace.hpp"

namespace nichols {

struct verification_error : std::runtime_error {
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

namespace verify_detail {

inline void require(bool cond, const std::string& relation) {
  if (!cond) throw verification_error("violated relation: " + relation);
}

inline void check_in_class_witness(const PermGroup& G, const Perm& s, const Perm& member,
                                   const Perm& wit, const std::string& what) {
  require(G.contains(wit), what + ": witness not a group member");
  require(conjugate(wit, s) == member, what + ": witness does not conjugate the base");
}

}  // namespace verify_detail

// Re-verifies one traced pair. `table` must be the centralizer table of the
// pair's class representative (recomputed, not taken from the search).
inline void verify_pair(const PermGroup& G, const TracePair& pair, const CharacterTable* table,
                        const ConjBudgets& budgets = {}, uint64_t enum_budget = 100000,
                        uint64_t assignment_budget = 200000) {
  using verify_detail::check_in_class_witness;
  using verify_detail::require;

  const Perm& s = pair.rep;
  require(G.contains(s), "class representative lies in the group");

  if (pair.outcome == Outcome::Unknown) return;

  if (pair.certificate && std::holds_alternative<CertIdentity>(*pair.certificate)) {
    require(s.is_identity(), "identity-class: representative is the identity");
    return;
  }
  require(table != nullptr, "centralizer table available");
  require(pair.irrep < table->irrep_count(), "irrep index in range");
  uint64_t degree = table->degree(pair.irrep);
  require(degree == pair.degree, "recorded degree matches the table");
  Cyclotomic qss = table->q_scalar(pair.irrep, s);
  require(pair.qss && *pair.qss == qss, "recorded q_ss matches the table");

  if (pair.outcome == Outcome::NegativeBraiding) {
    require(degree == 1, "negative braiding: degree 1");
    require(qss == Cyclotomic(-1), "negative braiding: q_ss = -1");
    ClassConfig ccfg;
    ccfg.enum_budget = enum_budget;
    ccfg.conj = budgets;
    PermGroup cent = centralizer(G, s, budgets);
    auto inter = class_meet_centralizer(G, s, cent, ccfg);
    for (size_t t = 1; t < inter.members.size(); ++t) {
      Perm gamma_1t = inter.reps[t].inverse() * s * inter.reps[t];
      require(table->character_at(pair.irrep, gamma_1t * inter.members[t]) == Cyclotomic(1),
              "negative braiding: rho(gamma_1t gamma_t1) = 1");
    }
    return;
  }

  require(pair.certificate.has_value(), "infinite verdict carries a certificate");
  const Certificate& cert = *pair.certificate;

  if (const auto* c = std::get_if<CertRealScalar>(&cert)) {
    check_in_class_witness(G, s, s.inverse(), c->witness, "real-scalar");
    require(qss != Cyclotomic(-1), "real-scalar: q_ss != -1");
    return;
  }

  if (const auto* c = std::get_if<CertPowerScalar>(&cert)) {
    uint64_t ord = s.order();
    require(c->k >= 2 && c->k < static_cast<long long>(ord), "power-scalar: 2 <= k < |s|");
    check_in_class_witness(G, s, s.power(c->k), c->witness, "power-scalar");
    bool clause = (degree > 1 && qss != Cyclotomic(-1)) ||
                  (degree == 1 && qss != Cyclotomic(-1) &&
                   !criteria_detail::in_g3_nontrivial(qss)) ||
                  ((c->k * c->k) % static_cast<long long>(ord) != 1 && qss != Cyclotomic(-1));
    require(clause, "power-scalar: a firing clause holds");
    return;
  }

  auto check_witness_block = [&](const SubrackWitness& w) {
    require(!w.elements.empty(), "witness subset nonempty");
    PermGroup cent = centralizer(G, s, budgets);
    for (size_t k = 0; k < w.elements.size(); ++k) {
      check_in_class_witness(G, s, w.elements[k], w.reps[k], "abelian witness");
      require(cent.contains(w.elements[k]), "abelian witness: member centralizes s");
    }
    require(is_abelian_subrack(w.elements), "abelian witness: members commute");
    return cent;
  };

  if (const auto* c = std::get_if<CertDiagonalSubspace>(&cert)) {
    require(degree == 1, "diagonal subspace: degree 1");
    PermGroup cent = check_witness_block(c->witness);
    size_t n = c->witness.elements.size();
    require(c->qmat.q.size() == n, "diagonal subspace: q-matrix dimension");
    for (size_t k = 0; k < n; ++k) {
      require(c->qmat.q[k].size() == n, "diagonal subspace: q-matrix square");
      for (size_t l = 0; l < n; ++l) {
        Perm gamma = c->witness.reps[l].inverse() * c->witness.elements[k] * c->witness.reps[l];
        require(cent.contains(gamma), "diagonal subspace: gamma in the centralizer");
        require(table->character_at(pair.irrep, gamma) == c->qmat.q[k][l],
                "diagonal subspace: q entry equals rho(gamma)");
      }
    }
    if (c->cartan) {
      DiagonalBraiding b = c->qmat;
      auto cm = cartan_data(b);
      require(cm.has_value(), "cartan route: braiding is of Cartan type");
      require(cm->a == c->cartan->a, "cartan route: recorded Cartan matrix");
      require(!is_finite_type(*cm), "cartan route: matrix not of finite type");
    } else {
      require(c->obstruction.has_value(), "hecke route: obstruction recorded");
      GDD g = gdd(c->qmat);
      const auto& ob = *c->obstruction;
      if (ob.kind == HeckeObstruction::Valency) {
        require(ob.vertices.size() >= 5, "hecke route: valency exceeds 3");
        size_t v = ob.vertices[0];
        std::set<size_t> nbs(ob.vertices.begin() + 1, ob.vertices.end());
        require(nbs.size() == ob.vertices.size() - 1, "hecke route: neighbors distinct");
        for (size_t u : nbs) require(g.has_edge(v, u), "hecke route: neighbor edges present");
      } else {
        require(ob.vertices.size() >= 4, "hecke route: cycle length at least 4");
        std::set<size_t> uniq(ob.vertices.begin(), ob.vertices.end());
        require(uniq.size() == ob.vertices.size(), "hecke route: cycle vertices distinct");
        for (size_t i = 0; i < ob.vertices.size(); ++i) {
          size_t u = ob.vertices[i], v = ob.vertices[(i + 1) % ob.vertices.size()];
          require(g.has_edge(u, v), "hecke route: cycle edges present");
        }
      }
      for (const auto& vx : g.vertex)
        require(vx.as_root_of_unity().has_value(), "hecke route: vertex labels roots of unity");
    }
    return;
  }

  if (const auto* c = std::get_if<CertJointEigen>(&cert)) {
    require(degree > 1, "joint eigen: degree exceeds 1");
    check_witness_block(c->witness);
    SubrackWitness w = c->witness;
    // rebuild gammas from the recorded reps
    size_t n = w.elements.size();
    w.gammas.assign(n, std::vector<Perm>(n));
    for (size_t k = 0; k < n; ++k)
      for (size_t l = 0; l < n; ++l)
        w.gammas[k][l] = w.reps[l].inverse() * w.elements[k] * w.reps[l];
    auto jp = criteria_detail::build_joint_problem(w, *table, pair.irrep, s);
    require(jp.has_value(), "joint eigen: family commutes");
    require(jp->family == c->family, "joint eigen: recorded family matches");
    auto fires = criteria_detail::joint_analysis_fires(*jp, assignment_budget);
    require(fires.has_value(), "joint eigen: assignment budget sufficient");
    require(*fires, "joint eigen: every consistent assignment is obstructed");
    return;
  }

  if (const auto* c = std::get_if<CertDp>(&cert)) {
    require(c->p == 3 || c->p == 5 || c->p == 7, "dp: p is an odd prime");
    require(qss == Cyclotomic(-1), "dp: q_ss = -1");
    require(verify_dp(c->family), "dp: defining relations");
    require(c->family.sigma[0] == s, "dp: family starts at the representative");
    require(c->family.witnesses.size() == c->p, "dp: witness count");
    for (unsigned i = 0; i < c->p; ++i)
      check_in_class_witness(G, s, c->family.sigma[i], c->family.witnesses[i], "dp member");
    require(c->power_k >= 1, "dp: in-class power recorded");
    require(is_conjugate(G, s, s.power(c->power_k), budgets).has_value(),
            "dp: s^k lies in the class");
    return;
  }

  auto check_o2_family = [&](const O2Family& fam) {
    require(verify_o2(fam), "o2: defining relations");
    require(fam.sigma[0] == s, "o2: family starts at the representative");
    for (int i = 0; i < 6; ++i) {
      check_in_class_witness(G, s, fam.sigma[i], fam.sigma_wit[i], "o2 sigma member");
      check_in_class_witness(G, s, fam.tau[i], fam.tau_wit[i], "o2 tau member");
    }
  };

  if (const auto* c = std::get_if<CertO2Special>(&cert)) {
    require(qss == Cyclotomic(-1), "o2-special: q_ss = -1");
    check_o2_family(c->family);
    require(c->family.sigma[5] == s.power(c->d), "o2-special: sigma6 = s^d");
    require(c->family.tau[0] == s.power(c->e), "o2-special: tau1 = s^e");
    return;
  }

  if (const auto* c = std::get_if<CertO2General>(&cert)) {
    require(degree == 1, "o2-general: degree 1");
    require(qss == Cyclotomic(-1), "o2-general: q_ss = -1");
    check_o2_family(c->family);
    require(G.contains(c->conjugator), "o2-general: conjugator in the group");
    require(rack_op(c->conjugator, c->family.sigma[0]) == c->family.tau[0],
            "o2-general: g maps sigma1 to tau1");
    PermGroup cent = centralizer(G, s, budgets);
    Perm c1 = c->conjugator.inverse() * c->family.sigma[0] * c->conjugator;
    Perm c6 = c->conjugator.inverse() * c->family.sigma[5] * c->conjugator;
    for (const Perm* x : std::initializer_list<const Perm*>{&c->family.sigma[5],
                                                            &c->family.tau[0], &c1, &c6}) {
      require(cent.contains(*x), "o2-general: eigen element centralizes s");
      require(table->character_at(pair.irrep, *x) == Cyclotomic(-1),
              "o2-general: rho value is -1");
    }
    return;
  }

  throw verification_error("unknown certificate kind");
}

// Verifies a whole trace; returns the number of verified pairs.
inline size_t verify_trace(const TraceFile& tf, const ConjBudgets& budgets = {},
                           uint64_t enum_budget = 100000) {
  PermGroup G(tf.def.degree, tf.def.generators);
  // group tables per class representative (identity pairs need none)
  std::map<unsigned, std::shared_ptr<CharacterTable>> tables;
  for (const TracePair& p : tf.pairs) {
    std::shared_ptr<CharacterTable> table;
    if (!p.rep.is_identity()) {
      auto it = tables.find(p.class_label);
      if (it == tables.end()) {
        PermGroup cent = centralizer(G, p.rep, budgets);
        table = std::make_shared<CharacterTable>(burnside_dixon(cent, enum_budget));
        tables.emplace(p.class_label, table);
      } else {
        table = it->second;
      }
    }
    verify_pair(G, p, table.get(), budgets, enum_budget);
  }
  return tf.pairs.size();
}

}  // namespace nichols
