#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "nichols/group.hpp"

using namespace nichols;

namespace {

PermGroup symmetric(unsigned n) {
  std::vector<Perm> gens;
  std::vector<unsigned> cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  gens.push_back(Perm::from_images(cyc));
  std::vector<unsigned> tr(n);
  for (unsigned i = 0; i < n; ++i) tr[i] = i;
  std::swap(tr[0], tr[1]);
  gens.push_back(Perm::from_images(tr));
  return PermGroup(n, std::move(gens));
}

uint64_t factorial(unsigned n) {
  uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("orders of small groups") {
  CHECK(PermGroup::trivial(5).order() == 1);
  for (unsigned n = 2; n <= 8; ++n) CHECK(symmetric(n).order() == factorial(n));
  PermGroup d4(4, {Perm::parse_cycles("(1,2,3,4)", 4), Perm::parse_cycles("(1,3)", 4)});
  CHECK(d4.order() == 8);
}

TEST_CASE("Mathieu group orders") {
  CHECK(mathieu("m11").order() == 7920);
  CHECK(mathieu("m12").order() == 95040);
  CHECK(mathieu("m22").order() == 443520);
  CHECK(mathieu("m23").order() == 10200960);
  CHECK(mathieu("m24").order() == 244823040);
}

TEST_CASE("membership via stabilizer chain") {
  PermGroup g = mathieu("m11");
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    Perm x = g.random_element(rng);
    CHECK(g.contains(x));
  }
  // A transposition is odd; M11 consists of even permutations only.
  CHECK_FALSE(g.contains(Perm::parse_cycles("(1,2)", 11)));
  // Every generator passes the membership test.
  for (const Perm& gen : g.generators()) CHECK(g.contains(gen));
}

TEST_CASE("element enumeration matches order and is duplicate free") {
  PermGroup a4(4, {Perm::parse_cycles("(1,2,3)", 4), Perm::parse_cycles("(2,3,4)", 4)});
  CHECK(a4.order() == 12);
  auto els = a4.elements();
  CHECK(els.size() == 12);
  std::set<Perm> uniq(els.begin(), els.end());
  CHECK(uniq.size() == 12);
  for (const Perm& e : els) CHECK(a4.contains(e));
  CHECK_THROWS_AS(mathieu("m24").elements(1000), budget_error);
}

TEST_CASE("random elements are deterministic per seed") {
  PermGroup g = mathieu("m12");
  Rng r1(7), r2(7);
  for (int i = 0; i < 50; ++i) CHECK(g.random_element(r1) == g.random_element(r2));
}
