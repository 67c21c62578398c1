#include <catch2/catch_amalgamated.hpp>

#include "nichols/driver.hpp"
#include "nichols/verify.hpp"

using namespace nichols;

namespace {

// classified once, shared across test cases
const GroupResult& m11_result() {
  static GroupResult res = classify_group(mathieu("m11"), "m11");
  return res;
}

TracePair to_trace_pair(const GroupResult& res, const Verdict& v) {
  TracePair p;
  p.class_label = v.class_label;
  for (const auto& c : res.classes)
    if (c.label == v.class_label) p.rep = c.rep;
  p.irrep = v.irrep;
  p.degree = v.degree;
  p.qss = v.qss;
  p.outcome = v.outcome;
  p.stage = v.stage;
  p.certificate = v.certificate;
  return p;
}

}  // namespace

TEST_CASE("M11 reproduces the full classification") {
  const auto& res = m11_result();
  auto counts = count_outcomes(res);
  CHECK(counts.pairs == 84);
  CHECK(counts.abelian_infinite == 79);
  CHECK(counts.abelian_negative == 5);
  CHECK(counts.infinite == 80);
  CHECK(counts.negative == 4);
  CHECK(counts.unknown == 0);

  // the four surviving pairs: order-4 class with two linear characters,
  // and both order-8 classes with their q = -1 character
  std::multiset<std::pair<uint64_t, uint64_t>> survivors;  // (order of s, degree)
  for (const auto& v : res.verdicts) {
    if (v.outcome != Outcome::NegativeBraiding) continue;
    CHECK(v.qss == Cyclotomic(-1));
    CHECK(v.stage == Stage::NonAbelian);
    CHECK(v.search_exhausted);
    uint64_t ord = 0, size = 0;
    for (const auto& c : res.classes)
      if (c.label == v.class_label) {
        ord = c.rep.order();
        size = c.size;
      }
    survivors.insert({ord, v.degree});
    CHECK(size * v.degree == 990);  // dim M
  }
  CHECK(survivors == std::multiset<std::pair<uint64_t, uint64_t>>{
                         {4, 1}, {4, 1}, {8, 1}, {8, 1}});
}

TEST_CASE("stage monotonicity and certificate soundness on M11") {
  const auto& res = m11_result();
  PermGroup g = mathieu("m11");
  for (const auto& v : res.verdicts) {
    if (v.outcome == Outcome::Infinite && v.stage == Stage::Abelian)
      CHECK(v.certificate.has_value());
    // every emitted verdict re-verifies from raw data
    TracePair p = to_trace_pair(res, v);
    std::shared_ptr<CharacterTable> table;
    for (size_t c = 0; c < res.classes.size(); ++c)
      if (res.classes[c].label == v.class_label && res.analyses[c].table)
        table = res.analyses[c].table;
    CHECK_NOTHROW(verify_pair(g, p, table.get()));
  }
}

TEST_CASE("tampered certificates fail verification with a named relation") {
  const auto& res = m11_result();
  PermGroup g = mathieu("m11");

  // find a diagonal-subspace certificate and corrupt its q-matrix
  for (const auto& v : res.verdicts) {
    if (!v.certificate) continue;
    if (const auto* c = std::get_if<CertJointEigen>(&*v.certificate)) {
      TracePair p = to_trace_pair(res, v);
      auto bad = *c;
      REQUIRE(bad.family.size() >= 2);
      std::swap(bad.family[0], bad.family[1]);
      p.certificate = Certificate{bad};
      std::shared_ptr<CharacterTable> table;
      for (size_t cc = 0; cc < res.classes.size(); ++cc)
        if (res.classes[cc].label == v.class_label) table = res.analyses[cc].table;
      CHECK_THROWS_AS(verify_pair(g, p, table.get()), verification_error);
      break;
    }
  }

  // corrupt a dp family element
  for (const auto& v : res.verdicts) {
    if (!v.certificate) continue;
    if (const auto* c = std::get_if<CertDp>(&*v.certificate)) {
      TracePair p = to_trace_pair(res, v);
      auto bad = *c;
      bad.family.sigma[1] = bad.family.sigma[1].inverse();
      p.certificate = Certificate{bad};
      std::shared_ptr<CharacterTable> table;
      for (size_t cc = 0; cc < res.classes.size(); ++cc)
        if (res.classes[cc].label == v.class_label) table = res.analyses[cc].table;
      CHECK_THROWS_AS(verify_pair(g, p, table.get()), verification_error);
      break;
    }
  }

  // corrupt a power witness
  for (const auto& v : res.verdicts) {
    if (!v.certificate) continue;
    if (const auto* c = std::get_if<CertPowerScalar>(&*v.certificate)) {
      TracePair p = to_trace_pair(res, v);
      auto bad = *c;
      bad.k = bad.k + 1;
      p.certificate = Certificate{bad};
      std::shared_ptr<CharacterTable> table;
      for (size_t cc = 0; cc < res.classes.size(); ++cc)
        if (res.classes[cc].label == v.class_label) table = res.analyses[cc].table;
      CHECK_THROWS_AS(verify_pair(g, p, table.get()), verification_error);
      break;
    }
  }
}

TEST_CASE("traces round trip and re-verify") {
  const auto& res = m11_result();
  GroupDef def = builtin_group_def("m11");
  std::ostringstream os;
  emit_trace(os, "m11", def, res.classes, res.verdicts);
  std::istringstream is(os.str());
  TraceFile tf = parse_trace(is);
  REQUIRE(tf.pairs.size() == res.verdicts.size());
  CHECK(verify_trace(tf) == res.verdicts.size());

  // byte-identical re-emission through the same pipeline state
  std::ostringstream os2;
  emit_trace(os2, "m11", def, res.classes, res.verdicts);
  CHECK(os.str() == os2.str());
}

TEST_CASE("negative-braiding equivalence of the two commuting-pair conditions") {
  // On every surviving pair: the scan over O_s ∩ G^s agrees with checking
  // rho(gamma_kl gamma_lk) = 1 over sampled commuting pairs drawn from the
  // class at large.
  PermGroup g = mathieu("m11");
  const auto& res = m11_result();
  Rng rng(99);
  for (const auto& v : res.verdicts) {
    if (v.outcome != Outcome::NegativeBraiding) continue;
    size_t cidx = 0;
    for (size_t c = 0; c < res.classes.size(); ++c)
      if (res.classes[c].label == v.class_label) cidx = c;
    const ClassAnalysis& a = res.analyses[cidx];
    const Perm& s = a.cls.rep;

    auto orbit = ConjugationOrbit::enumerate(s, g.generators(), 1 << 20);
    REQUIRE(orbit.has_value());
    size_t checked = 0;
    while (checked < 500) {
      size_t i = rng.below(orbit->size()), j = rng.below(orbit->size());
      Perm x = orbit->element(i), y = orbit->element(j);
      if (!commute(x, y)) continue;
      ++checked;
      Perm gx = orbit->witness(i), gy = orbit->witness(j);
      Perm gamma_xy = gy.inverse() * x * gy;
      Perm gamma_yx = gx.inverse() * y * gx;
      CHECK(a.table->character_at(v.irrep, gamma_xy * gamma_yx) == Cyclotomic(1));
    }
  }
}

TEST_CASE("witness independence of the deg-1 braiding scalars") {
  // rho(gamma_kl) is unchanged under replacing the witnesses g_k by g_k eta
  // with eta in the centralizer.
  PermGroup g = mathieu("m11");
  const auto& res = m11_result();
  Rng rng(123);
  for (const auto& v : res.verdicts) {
    if (v.outcome != Outcome::NegativeBraiding) continue;
    size_t cidx = 0;
    for (size_t c = 0; c < res.classes.size(); ++c)
      if (res.classes[c].label == v.class_label) cidx = c;
    const ClassAnalysis& a = res.analyses[cidx];
    const auto& inter = *a.inter;
    auto cent_els = a.cls.centralizer.elements();
    for (int trial = 0; trial < 20; ++trial) {
      size_t k = rng.below(inter.members.size());
      size_t l = rng.below(inter.members.size());
      if (!commute(inter.members[k], inter.members[l])) continue;
      const Perm& eta_k = cent_els[rng.below(cent_els.size())];
      const Perm& eta_l = cent_els[rng.below(cent_els.size())];
      Perm gk = inter.reps[k] * eta_k, gl = inter.reps[l] * eta_l;
      Perm gamma = gl.inverse() * inter.members[k] * gl;
      Perm gamma0 = inter.reps[l].inverse() * inter.members[k] * inter.reps[l];
      CHECK(a.table->character_at(v.irrep, gamma) ==
            a.table->character_at(v.irrep, gamma0));
    }
  }
}

TEST_CASE("structured searches agree with exhaustive pools on small classes") {
  PermGroup g = mathieu("m12");
  auto classes = conjugacy_classes(g);
  CriteriaConfig cfg;
  for (const auto& cls : classes) {
    uint64_t ord = cls.rep.order();
    if (ord < 6 || cls.rep.is_identity()) continue;
    auto full = full_class_pool(g, cls.rep, uint64_t(1) << 23);
    REQUIRE(full.has_value());
    for (unsigned p : {3u, 5u}) {
      auto sp = dp_pool_structured(g, cls.rep, p, cfg.conj, cfg.enum_budget);
      if (!sp.available) continue;
      auto full_res = search_dp(g, cls.rep, p, *full);
      auto str_res = search_dp(g, cls.rep, p, sp.pool);
      CHECK(full_res.family.has_value() == str_res.family.has_value());
    }
    if (ord >= 8) {
      auto sp = o2_pool_structured(g, cls.rep, cfg.conj, cfg.enum_budget);
      if (sp.available) {
        std::vector<std::pair<long long, Perm>> powers;
        for (long long k = 2; k < static_cast<long long>(ord); ++k) {
          auto w = is_conjugate(g, cls.rep, cls.rep.power(k));
          if (w) powers.emplace_back(k, *w);
        }
        auto full_res = search_o2(g, cls.rep, powers, *full);
        auto str_res = search_o2(g, cls.rep, powers, sp.pool);
        CHECK(full_res.family.has_value() == str_res.family.has_value());
      }
    }
  }
}
