#include <catch2/catch_amalgamated.hpp>

#include "nichols/cyclo.hpp"
#include "nichols/group.hpp"

using namespace nichols;

namespace {

// Möbius function for the Galois-sum identity.
int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

Cyclotomic rnd_value(Rng& rng, unsigned max_conductor) {
  unsigned n = 1 + static_cast<unsigned>(rng.below(max_conductor));
  Cyclotomic v(0);
  for (int t = 0; t < 3; ++t) {
    long long num = static_cast<long long>(rng.below(11)) - 5;
    long long den = 1 + static_cast<long long>(rng.below(4));
    long long k = static_cast<long long>(rng.below(n));
    v = v + Cyclotomic(Rat(num) / Rat(den)) * Cyclotomic::root(n, k);
  }
  return v;
}

}  // namespace

TEST_CASE("roots of unity basics") {
  CHECK(Cyclotomic::root(1, 0) == Cyclotomic(1));
  CHECK(Cyclotomic::root(2, 1) == Cyclotomic(-1));
  CHECK(Cyclotomic::root(8, 4) == Cyclotomic(-1));
  CHECK(Cyclotomic::root(6, 1) * Cyclotomic::root(6, 5) == Cyclotomic(1));
  CHECK_THROWS_AS(Cyclotomic::root(0, 1), std::invalid_argument);

  // i*sqrt(2) squared is -2
  Cyclotomic b = Cyclotomic::root(8, 1) + Cyclotomic::root(8, -1).conj().conj();
  b = Cyclotomic::root(8, 1) - Cyclotomic::root(8, 1).conj();
  CHECK(b * b == Cyclotomic(-2));
}

TEST_CASE("field arithmetic and the quadratic Gauss sum identity") {
  // A = (-1 - i sqrt 11)/2 is the sum of z(11)^k over non-residues mod 11.
  Cyclotomic a(0);
  for (unsigned k : {2u, 6u, 7u, 8u, 10u}) a = a + Cyclotomic::root(11, k);
  Cyclotomic aconj = a.conj();
  CHECK(a * aconj == Cyclotomic(3));
  CHECK(a + aconj == Cyclotomic(-1));
  CHECK(a != aconj);
}

TEST_CASE("conjugation inverts roots") {
  CHECK(Cyclotomic::root(11, 1).conj() == Cyclotomic::root(11, 10));
  Cyclotomic v = Cyclotomic(Rat(2, 3)) * Cyclotomic::root(7, 3) + Cyclotomic(5);
  CHECK(v.conj().conj() == v);
}

TEST_CASE("inverse and division") {
  Cyclotomic v = Cyclotomic(1) + Cyclotomic::root(5, 1);
  CHECK(v * v.inverse() == Cyclotomic(1));
  CHECK_THROWS_AS(Cyclotomic(0).inverse(), std::domain_error);
  Cyclotomic w = Cyclotomic(7) / Cyclotomic(2);
  CHECK(w.rational_value() == Rat(7, 2));
}

TEST_CASE("field axioms on random triples") {
  Rng rng(2024);
  for (int iter = 0; iter < 40; ++iter) {
    Cyclotomic a = rnd_value(rng, 14), b = rnd_value(rng, 14), c = rnd_value(rng, 14);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("Galois sums equal the Moebius function") {
  for (unsigned n = 1; n <= 30; ++n) {
    Cyclotomic sum(0);
    for (unsigned k = 0; k < n; ++k)
      if (std::gcd(k == 0 ? n : k, n) == 1) sum = sum + Cyclotomic::root(n, k);
    if (n == 1) sum = Cyclotomic(1);
    CHECK(sum == Cyclotomic(moebius(n)));
  }
}

TEST_CASE("as_root_of_unity round trips") {
  for (unsigned n = 1; n <= 24; ++n) {
    for (unsigned k = 0; k < n; ++k) {
      auto r = Cyclotomic::root(n, k).as_root_of_unity();
      REQUIRE(r.has_value());
      unsigned g = std::gcd(k == 0 ? n : k, n);
      unsigned want_r = (k == 0) ? 1 : n / g;
      CHECK(r->first == want_r);
      CHECK(Cyclotomic::root(r->first, r->second) == Cyclotomic::root(n, k));
    }
  }
  // norm != 1 is rejected
  Cyclotomic a(0);
  for (unsigned k : {2u, 6u, 7u, 8u, 10u}) a = a + Cyclotomic::root(11, k);
  CHECK_FALSE(a.as_root_of_unity().has_value());
  CHECK_FALSE(Cyclotomic(0).as_root_of_unity().has_value());
  CHECK_FALSE((Cyclotomic::root(5, 1) + Cyclotomic(1)).as_root_of_unity().has_value());
}

TEST_CASE("embedding and normalization are inverse") {
  Rng rng(99);
  for (int iter = 0; iter < 25; ++iter) {
    Cyclotomic v = rnd_value(rng, 12);
    unsigned n = v.conductor();
    Cyclotomic lifted = v.embed(n * 3);
    CHECK(lifted == v);
    CHECK(lifted.normalized().conductor() <= n * 3);
    CHECK(lifted.normalized() == v);
  }
  CHECK(Cyclotomic::root(6, 1).normalized().conductor() == 3);
}

TEST_CASE("serialization round trips") {
  Rng rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    Cyclotomic v = rnd_value(rng, 16);
    CHECK(Cyclotomic::from_string(v.to_string()) == v);
  }
  CHECK(Cyclotomic::from_string("0") == Cyclotomic(0));
  CHECK(Cyclotomic::from_string("-3/2") == Cyclotomic(Rat(-3, 2)));
  CHECK(Cyclotomic::from_string("1 + 2*z(8)^3") ==
        Cyclotomic(1) + Cyclotomic(2) * Cyclotomic::root(8, 3));
  CHECK(Cyclotomic::from_string("z(4)") == Cyclotomic::root(4, 1));
  CHECK(Cyclotomic::from_string("2 - z(3)") == Cyclotomic(2) - Cyclotomic::root(3, 1));
}
