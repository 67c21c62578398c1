#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "nichols/chartab.hpp"
#include "nichols/classes.hpp"

using namespace nichols;

namespace {

std::multiset<uint64_t> degree_multiset(const CharacterTable& t) {
  std::multiset<uint64_t> out;
  for (size_t i = 0; i < t.irrep_count(); ++i) out.insert(t.degree(i));
  return out;
}

PermGroup cyclic(unsigned n) {
  std::vector<unsigned> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return PermGroup(n, {Perm::from_images(img)});
}

}  // namespace

TEST_CASE("trivial group table") {
  auto t = burnside_dixon(PermGroup::trivial(3));
  REQUIRE(t.class_count() == 1);
  REQUIRE(t.irrep_count() == 1);
  CHECK(t.rows[0][0] == Cyclotomic(1));
}

TEST_CASE("cyclic group tables") {
  for (unsigned n : {2u, 3u, 4u, 6u, 8u}) {
    auto t = burnside_dixon(cyclic(n));
    REQUIRE(t.class_count() == n);
    for (size_t i = 0; i < n; ++i) CHECK(t.degree(i) == 1);
  }
  // the character with s -> -1 on Z_8 takes value -1 at s^3 as well
  auto t8 = burnside_dixon(cyclic(8));
  Perm s = Perm::parse_cycles("(1,2,3,4,5,6,7,8)", 8);
  bool found = false;
  for (size_t i = 0; i < 8; ++i) {
    if (t8.character_at(i, s) == Cyclotomic(-1)) {
      found = true;
      CHECK(t8.q_scalar(i, s) == Cyclotomic(-1));
      CHECK(t8.character_at(i, s.power(3)) == Cyclotomic(-1));
      CHECK(t8.character_at(i, s.power(2)) == Cyclotomic(1));
    }
  }
  CHECK(found);
}

TEST_CASE("symmetric and alternating group tables") {
  PermGroup s3(3, {Perm::parse_cycles("(1,2,3)", 3), Perm::parse_cycles("(1,2)", 3)});
  auto t3 = burnside_dixon(s3);
  CHECK(degree_multiset(t3) == std::multiset<uint64_t>{1, 1, 2});

  PermGroup s4(4, {Perm::parse_cycles("(1,2,3,4)", 4), Perm::parse_cycles("(1,2)", 4)});
  auto t4 = burnside_dixon(s4);
  CHECK(degree_multiset(t4) == std::multiset<uint64_t>{1, 1, 2, 3, 3});

  PermGroup a5(5, {Perm::parse_cycles("(1,2,3,4,5)", 5), Perm::parse_cycles("(1,2,3)", 5)});
  auto t5 = burnside_dixon(a5);
  CHECK(degree_multiset(t5) == std::multiset<uint64_t>{1, 3, 3, 4, 5});
  // golden-ratio entries on the 5-cycles: chi(5A) for a degree-3 row is
  // -(z5^2 + z5^3) or -(z5 + z5^4)
  Perm c5 = Perm::parse_cycles("(1,2,3,4,5)", 5);
  Cyclotomic g1 = -(Cyclotomic::root(5, 2) + Cyclotomic::root(5, 3));
  Cyclotomic g2 = -(Cyclotomic::root(5, 1) + Cyclotomic::root(5, 4));
  int golden = 0;
  for (size_t i = 0; i < 5; ++i) {
    Cyclotomic v = t5.character_at(i, c5);
    if (v == g1 || v == g2) ++golden;
  }
  CHECK(golden == 2);
}

TEST_CASE("M11 centralizer of the order-2 class s5: Table data") {
  PermGroup g = mathieu("m11");
  Perm s5 = Perm::parse_cycles("(1,2)(4,10)(5,6)(7,8)", 11);
  PermGroup cent = centralizer(g, s5);
  REQUIRE(cent.order() == 48);
  auto t = burnside_dixon(cent);
  REQUIRE(t.irrep_count() == 8);
  CHECK(degree_multiset(t) == std::multiset<uint64_t>{1, 1, 2, 2, 2, 3, 3, 4});

  // class structure: orders 1,2,3,2,6,4,8,8 and sizes 1,12,8,1,8,6,6,6
  std::multiset<std::pair<uint64_t, uint64_t>> cls, expect = {
      {1, 1}, {2, 12}, {3, 8}, {2, 1}, {6, 8}, {4, 6}, {8, 6}, {8, 6}};
  for (const auto& c : t.classes) cls.insert({c.order, c.size});
  CHECK(cls == expect);

  // q_ss = chi(s5)/deg: the two degree-2 rows with q = -1 and the degree-4 row
  int deg2_neg = 0, deg4_neg = 0, others_nonneg = 0;
  for (size_t i = 0; i < t.irrep_count(); ++i) {
    Cyclotomic q = t.q_scalar(i, s5);
    if (q == Cyclotomic(-1)) {
      if (t.degree(i) == 2) ++deg2_neg;
      if (t.degree(i) == 4) ++deg4_neg;
    } else {
      ++others_nonneg;
    }
  }
  CHECK(deg2_neg == 2);
  CHECK(deg4_neg == 1);
  CHECK(others_nonneg == 5);
}

TEST_CASE("eigenvalue multisets match the M11 j=5 analysis") {
  PermGroup g = mathieu("m11");
  Perm s5 = Perm::parse_cycles("(1,2)(4,10)(5,6)(7,8)", 11);
  PermGroup cent = centralizer(g, s5);
  auto t = burnside_dixon(cent);

  // sigma_2 from the analysis: an involution in the size-12 class
  Perm sigma2 = Perm::parse_cycles("(4,10)(5,8)(6,7)(9,11)", 11);
  REQUIRE(cent.contains(sigma2));
  REQUIRE(t.classes[t.class_of(sigma2)].size == 12);

  for (size_t i = 0; i < t.irrep_count(); ++i) {
    Cyclotomic q = t.q_scalar(i, s5);
    if (q != Cyclotomic(-1)) continue;
    auto m = t.eigenvalue_multiset(i, sigma2);
    if (t.degree(i) == 2) {
      // {+1:1, -1:1}
      CHECK(m == std::map<unsigned, uint64_t>{{0, 1}, {1, 1}});
    } else {
      // degree 4: {+1:2, -1:2}
      CHECK(m == std::map<unsigned, uint64_t>{{0, 2}, {1, 2}});
    }
  }

  // trivial character: multiset {1: 1} for any element
  size_t triv = 0;
  for (size_t i = 0; i < t.irrep_count(); ++i) {
    bool is_triv = true;
    for (uint32_t c = 0; c < t.class_count(); ++c)
      is_triv = is_triv && t.rows[i][c] == Cyclotomic(1);
    if (is_triv) triv = i;
  }
  auto m = t.eigenvalue_multiset(triv, sigma2);
  CHECK(m == std::map<unsigned, uint64_t>{{0, 1}});
}

TEST_CASE("M12 centralizer tables: degree multisets from the analysis") {
  PermGroup g = mathieu("m12");
  Perm s4 = Perm::parse_cycles("(2,9)(3,10)(4,5)(6,11)", 12);
  REQUIRE(g.contains(s4));
  PermGroup c4 = centralizer(g, s4);
  REQUIRE(c4.order() == 192);
  auto t4 = burnside_dixon(c4);
  REQUIRE(t4.irrep_count() == 13);
  CHECK(degree_multiset(t4) ==
        std::multiset<uint64_t>{1, 1, 2, 3, 3, 3, 3, 3, 3, 4, 4, 6, 8});
}

TEST_CASE("deg-1 characters are multiplicative") {
  PermGroup g = mathieu("m11");
  Perm s5 = Perm::parse_cycles("(1,2)(4,10)(5,6)(7,8)", 11);
  PermGroup cent = centralizer(g, s5);
  auto t = burnside_dixon(cent);
  Rng rng(5);
  auto els = cent.elements();
  for (size_t i = 0; i < t.irrep_count(); ++i) {
    if (t.degree(i) != 1) continue;
    for (int k = 0; k < 200; ++k) {
      const Perm& a = els[rng.below(els.size())];
      const Perm& b = els[rng.below(els.size())];
      CHECK(t.character_at(i, a * b) == t.character_at(i, a) * t.character_at(i, b));
    }
  }
}

TEST_CASE("Dixon output is deterministic") {
  PermGroup g = mathieu("m11");
  Perm s5 = Perm::parse_cycles("(1,2)(4,10)(5,6)(7,8)", 11);
  PermGroup cent = centralizer(g, s5);
  auto t1 = burnside_dixon(cent);
  auto t2 = burnside_dixon(cent);
  REQUIRE(t1.irrep_count() == t2.irrep_count());
  for (size_t i = 0; i < t1.irrep_count(); ++i)
    for (uint32_t c = 0; c < t1.class_count(); ++c)
      CHECK(t1.rows[i][c] == t2.rows[i][c]);
}
