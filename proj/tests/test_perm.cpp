#include <catch2/catch_amalgamated.hpp>

#include "nichols/perm.hpp"

using namespace nichols;

TEST_CASE("compose follows left action") {
  // (0 1) then (1 2) in 0-based terms: q applied first.
  Perm p = Perm::from_images({1, 0, 2});
  Perm q = Perm::from_images({0, 2, 1});
  Perm r = p * q;
  CHECK(r == Perm::from_images({1, 2, 0}));

  Perm id(3);
  CHECK(id * p == p);
  CHECK(p * id == p);
  CHECK(p * p.inverse() == id);
  CHECK(p.inverse() * p == id);
}

TEST_CASE("degree mismatch is an error") {
  Perm a(3), b(4);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("conjugation basics") {
  Perm x = Perm::parse_cycles("(1,2,3)", 5);
  Perm g = Perm::parse_cycles("(1,4)(2,5)", 5);
  Perm id(5);
  CHECK(conjugate(id, x) == x);
  CHECK(conjugate(x, x) == x);
  CHECK(conjugate(g, x).order() == x.order());
  CHECK(conjugate(g, x) == Perm::parse_cycles("(4,5,3)", 5));
}

TEST_CASE("order and powers") {
  CHECK(Perm(7).order() == 1);
  Perm c = Perm::parse_cycles("(1,2,3,4)(5,6)", 8);
  CHECK(c.order() == 4);
  CHECK(c.power(4) == Perm(8));
  CHECK(c.power(-1) == c.inverse());
  CHECK(c.power(3) == c * c * c);
  Perm m = Perm::parse_cycles("(1,2,3)(4,5)(6,7,8,9,10)", 10);
  CHECK(m.order() == 30);
}

TEST_CASE("cycle notation round trip") {
  Perm p = Perm::parse_cycles("(1,8,2,7)(4,6,10,5)", 11);
  CHECK(p.cycles() == "(1,8,2,7)(4,6,10,5)");
  CHECK(Perm::parse_cycles(p.cycles(), 11) == p);
  CHECK(Perm(6).cycles() == "()");
  CHECK(Perm::parse_cycles("()", 6) == Perm(6));
  CHECK(Perm::parse_cycles(" ( 1, 2 ) ( 3 , 4 ) ", 4) ==
        Perm::from_images({1, 0, 3, 2}));
  CHECK_THROWS_AS(Perm::parse_cycles("(1,2", 4), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse_cycles("(1,5)", 4), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse_cycles("(1,2)(2,3)", 4), std::invalid_argument);
}

TEST_CASE("cycle type") {
  Perm p = Perm::parse_cycles("(1,2,3,4)(5,6)(7,8)", 10);
  CHECK(p.cycle_type() == std::vector<unsigned>{1, 1, 2, 2, 4});
}

TEST_CASE("packing round trips at several degrees") {
  for (unsigned n : {2u, 5u, 11u, 16u, 17u, 24u, 32u}) {
    Perm p(n);
    // deterministic scramble
    std::vector<unsigned> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = (i * 7 + 3) % n;
    // may not be a bijection for composite n; fall back to a rotation
    bool ok = true;
    {
      std::vector<bool> seen(n, false);
      for (unsigned v : img) {
        if (seen[v]) {
          ok = false;
          break;
        }
        seen[v] = true;
      }
    }
    if (!ok)
      for (unsigned i = 0; i < n; ++i) img[i] = (i + 1) % n;
    p = Perm::from_images(img);
    CHECK(unpack_perm(pack_perm(p), n) == p);
  }
}
