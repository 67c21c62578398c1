#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "nichols/classes.hpp"

using namespace nichols;

namespace {

PermGroup symmetric(unsigned n) {
  std::vector<unsigned> cyc(n), tr(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n, tr[i] = i;
  std::swap(tr[0], tr[1]);
  return PermGroup(n, {Perm::from_images(cyc), Perm::from_images(tr)});
}

// (rep order, centralizer order) multiset of a class list.
std::multiset<std::pair<uint64_t, uint64_t>> census(const std::vector<ConjClass>& cls) {
  std::multiset<std::pair<uint64_t, uint64_t>> out;
  for (const auto& c : cls) out.insert({c.rep.order(), c.centralizer.order()});
  return out;
}

}  // namespace

TEST_CASE("brute-force oracles on S5") {
  PermGroup g = symmetric(5);
  auto all = g.elements();

  // centralizer vs direct filter
  Perm x = Perm::parse_cycles("(1,2,3)(4,5)", 5);
  PermGroup c = centralizer(g, x);
  size_t brute = 0;
  for (const Perm& e : all)
    if (commute(e, x)) ++brute;
  CHECK(c.order() == brute);
  for (const Perm& e : all) CHECK(c.contains(e) == commute(e, x));

  // is_conjugate vs brute search, both directions of the answer
  Perm y = Perm::parse_cycles("(2,4,5)(1,3)", 5);
  auto w = is_conjugate(g, x, y);
  REQUIRE(w.has_value());
  CHECK(conjugate(*w, x) == y);
  Perm z = Perm::parse_cycles("(1,2,3)", 5);
  CHECK_FALSE(is_conjugate(g, x, z).has_value());

  // class census vs brute partition
  auto classes = conjugacy_classes(g);
  CHECK(classes.size() == 7);
  uint64_t total = 0;
  for (const auto& cl : classes) {
    total += cl.size;
    CHECK(cl.size * cl.centralizer.order() == g.order());
  }
  CHECK(total == 120);
}

TEST_CASE("forcing the orbit path agrees with the coset path") {
  PermGroup g = mathieu("m11");
  Perm s4 = Perm::parse_cycles("(1,8,2,7)(4,6,10,5)", 11);
  REQUIRE(g.contains(s4));
  ConjBudgets coset_only;  // default: coset preferred for small Sn-centralizers
  ConjBudgets orbit_only;
  orbit_only.coset = 0;  // never use the coset filter
  PermGroup c1 = centralizer(g, s4, coset_only);
  PermGroup c2 = centralizer(g, s4, orbit_only);
  CHECK(c1.order() == 8);
  CHECK(c2.order() == 8);
  for (const Perm& p : c1.elements()) CHECK(c2.contains(p));

  Perm s5 = Perm::parse_cycles("(1,2)(4,10)(5,6)(7,8)", 11);
  auto w1 = is_conjugate(g, s4, conjugate(g.generators()[0], s4), coset_only);
  auto w2 = is_conjugate(g, s4, conjugate(g.generators()[0], s4), orbit_only);
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  CHECK_FALSE(is_conjugate(g, s4, s5, orbit_only).has_value());
}

TEST_CASE("M11 census matches the published class data") {
  PermGroup g = mathieu("m11");
  auto classes = conjugacy_classes(g);
  REQUIRE(classes.size() == 10);
  std::multiset<std::pair<uint64_t, uint64_t>> expected = {
      {1, 7920}, {11, 11}, {11, 11}, {4, 8}, {2, 48},
      {8, 8},    {8, 8},   {3, 18},  {5, 5}, {6, 6}};
  CHECK(census(classes) == expected);
}

TEST_CASE("M11 census agrees between enumeration and sampling paths") {
  PermGroup g = mathieu("m11");
  ClassConfig sampled;
  sampled.enum_budget = 1;  // force the sampling path
  auto c1 = conjugacy_classes(g);
  auto c2 = conjugacy_classes(g, sampled);
  CHECK(census(c1) == census(c2));
}

TEST_CASE("M12 census") {
  auto classes = conjugacy_classes(mathieu("m12"));
  REQUIRE(classes.size() == 15);
  std::multiset<std::pair<uint64_t, uint64_t>> expected = {
      {1, 95040}, {6, 6},   {3, 54},  {2, 192}, {8, 8},
      {4, 32},    {6, 12},  {3, 36},  {2, 240}, {5, 10},
      {11, 11},   {11, 11}, {10, 10}, {8, 8},   {4, 32}};
  CHECK(census(classes) == expected);
}

TEST_CASE("M22 census (sampling path)") {
  auto classes = conjugacy_classes(mathieu("m22"));
  REQUIRE(classes.size() == 12);
  std::multiset<std::pair<uint64_t, uint64_t>> expected = {
      {1, 443520}, {4, 32},  {2, 384}, {8, 8},   {7, 7},   {7, 7},
      {5, 5},      {11, 11}, {11, 11}, {4, 16},  {6, 12},  {3, 36}};
  CHECK(census(classes) == expected);
}

TEST_CASE("real classes in M11") {
  PermGroup g = mathieu("m11");
  Perm s2 = Perm::parse_cycles("(1,9,7,10,8,11,5,4,3,6,2)", 11);
  Perm s4 = Perm::parse_cycles("(1,8,2,7)(4,6,10,5)", 11);
  Perm s8 = Perm::parse_cycles("(1,6,4)(2,9,7)(8,11,10)", 11);
  REQUIRE(g.contains(s2));
  CHECK_FALSE(is_real_class(g, s2));
  CHECK(is_real_class(g, s4));
  CHECK(is_real_class(g, s8));
  CHECK(is_real_class(g, Perm(11)));
}

TEST_CASE("class intersections from the M11 analysis") {
  PermGroup g = mathieu("m11");
  ClassConfig cfg;

  Perm s4 = Perm::parse_cycles("(1,8,2,7)(4,6,10,5)", 11);
  auto i4 = class_meet_centralizer(g, s4, centralizer(g, s4), cfg);
  REQUIRE(i4.members.size() == 2);
  CHECK(i4.members[0] == s4);
  CHECK(i4.members[1] == s4.inverse());

  Perm s5 = Perm::parse_cycles("(1,2)(4,10)(5,6)(7,8)", 11);
  auto i5 = class_meet_centralizer(g, s5, centralizer(g, s5), cfg);
  CHECK(i5.members.size() == 13);

  // witnesses conjugate the base onto each member; first witness is identity
  CHECK(i5.reps[0].is_identity());
  for (size_t t = 0; t < i5.members.size(); ++t) {
    CHECK(conjugate(i5.reps[t], s5) == i5.members[t]);
    CHECK(g.contains(i5.reps[t]));
  }
}

TEST_CASE("power classes of the order-11 elements in M11") {
  PermGroup g = mathieu("m11");
  Perm s2 = Perm::parse_cycles("(1,9,7,10,8,11,5,4,3,6,2)", 11);
  CHECK(is_conjugate(g, s2, s2.power(3)).has_value());
  CHECK(is_conjugate(g, s2, s2.power(9)).has_value());
  CHECK_FALSE(is_conjugate(g, s2, s2.power(2)).has_value());
}
