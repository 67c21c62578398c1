#include <catch2/catch_amalgamated.hpp>

#include "nichols/braiding.hpp"

using namespace nichols;

namespace {

DiagonalBraiding from_ints(const std::vector<std::vector<int>>& q) {
  DiagonalBraiding b;
  for (const auto& row : q) {
    b.q.emplace_back();
    for (int v : row) b.q.back().push_back(Cyclotomic(v));
  }
  return b;
}

CartanMatrix cm(const std::vector<std::vector<int>>& a) {
  CartanMatrix m;
  m.a = a;
  return m;
}

// All valid generalized Cartan matrices of the given rank with off-diagonal
// entries in [-4, 0].
std::vector<CartanMatrix> all_gcms(size_t rank) {
  std::vector<CartanMatrix> out;
  size_t pairs = rank * (rank - 1) / 2;
  std::vector<int> entries(2 * pairs, 0);
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == entries.size()) {
      CartanMatrix m;
      m.a.assign(rank, std::vector<int>(rank, 0));
      size_t t = 0;
      for (size_t i = 0; i < rank; ++i) m.a[i][i] = 2;
      for (size_t i = 0; i < rank; ++i)
        for (size_t j = i + 1; j < rank; ++j) {
          m.a[i][j] = -entries[2 * t];
          m.a[j][i] = -entries[2 * t + 1];
          ++t;
        }
      // GCM condition: a_ij = 0 iff a_ji = 0
      for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < rank; ++j)
          if (i != j && (m.a[i][j] == 0) != (m.a[j][i] == 0)) return;
      out.push_back(std::move(m));
      return;
    }
    for (int v = 0; v <= 4; ++v) {
      entries[idx] = v;
      rec(idx + 1);
    }
  };
  rec(0);
  return out;
}

// Oracle: the explicitly enumerated finite-type list at rank <= 3, closed
// under simultaneous permutation.
bool finite_oracle(const CartanMatrix& m) {
  static const std::vector<std::vector<std::vector<int>>> base = {
      {{2}},
      // rank 2
      {{2, 0}, {0, 2}},
      {{2, -1}, {-1, 2}},
      {{2, -1}, {-2, 2}},
      {{2, -2}, {-1, 2}},
      {{2, -1}, {-3, 2}},
      {{2, -3}, {-1, 2}},
      // rank 3: disconnected combinations
      {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}},
      {{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}},
      {{2, -1, 0}, {-2, 2, 0}, {0, 0, 2}},
      {{2, -2, 0}, {-1, 2, 0}, {0, 0, 2}},
      {{2, -1, 0}, {-3, 2, 0}, {0, 0, 2}},
      {{2, -3, 0}, {-1, 2, 0}, {0, 0, 2}},
      // rank 3: connected finite types A3, B3, C3
      {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}},
      {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}},
      {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}},
  };
  size_t n = m.dim();
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<std::vector<int>> p(n, std::vector<int>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) p[i][j] = m.a[perm[i]][perm[j]];
    for (const auto& b : base)
      if (b.size() == n && p == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("gdd construction") {
  // no edges when all opposite products are 1
  DiagonalBraiding diag = from_ints({{-1, 1}, {1, -1}});
  GDD g0 = gdd(diag);
  CHECK_FALSE(g0.has_edge(0, 1));

  // the M11 j=5 matrix: a triangle with all edge labels -1
  DiagonalBraiding q4 = from_ints({{-1, -1, 1}, {1, -1, 1}, {-1, -1, -1}});
  GDD g1 = gdd(q4);
  CHECK(g1.has_edge(0, 1));
  CHECK(g1.has_edge(0, 2));
  CHECK(g1.has_edge(1, 2));
  CHECK(*g1.edge[0][1] == Cyclotomic(-1));
  CHECK(*g1.edge[0][2] == Cyclotomic(-1));
  CHECK(*g1.edge[1][2] == Cyclotomic(-1));

  // the Q1 matrix from the M12 j=7 analysis: also an all -1 triangle
  DiagonalBraiding q1 = from_ints({{-1, -1, 1}, {1, -1, -1}, {-1, 1, -1}});
  GDD g2 = gdd(q1);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j) CHECK(g2.has_edge(i, j));
}

TEST_CASE("cartan data extraction") {
  DiagonalBraiding q4 = from_ints({{-1, -1, 1}, {1, -1, 1}, {-1, -1, -1}});
  auto a = cartan_data(q4);
  REQUIRE(a.has_value());
  CHECK(a->a == std::vector<std::vector<int>>{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  CHECK_FALSE(is_finite_type(*a));

  DiagonalBraiding single = from_ints({{-1}});
  auto a1 = cartan_data(single);
  REQUIRE(a1.has_value());
  CHECK(a1->a == std::vector<std::vector<int>>{{2}});
  CHECK(is_finite_type(*a1));

  // q_ii = 1 is rejected
  DiagonalBraiding bad = from_ints({{1, -1}, {-1, 1}});
  CHECK_FALSE(cartan_data(bad).has_value());
}

TEST_CASE("the 4x4 matrix of the M22 j=10 analysis is not of finite type") {
  CartanMatrix a = cm({{2, 0, -1, -1}, {0, 2, -1, -1}, {-1, -1, 2, 0}, {-1, -1, 0, 2}});
  CHECK_FALSE(is_finite_type(a));
}

TEST_CASE("finite type agrees with the explicit rank <= 3 list") {
  for (size_t rank : {1u, 2u, 3u}) {
    for (const CartanMatrix& m : all_gcms(rank)) {
      INFO("rank " << rank);
      CHECK(is_finite_type(m) == finite_oracle(m));
    }
  }
}

TEST_CASE("hecke obstructions") {
  // path graph: no obstruction
  DiagonalBraiding path = from_ints({{-1, -1, 1}, {1, -1, -1}, {1, 1, -1}});
  CHECK_FALSE(hecke_obstruction(gdd(path)).has_value());

  // 4-cycle
  DiagonalBraiding cyc = from_ints({{-1, -1, 1, -1},
                                    {1, -1, -1, 1},
                                    {1, 1, -1, -1},
                                    {1, 1, 1, -1}});
  // edges: 01, 12, 23, 03
  GDD g = gdd(cyc);
  REQUIRE(g.has_edge(0, 1));
  REQUIRE(g.has_edge(1, 2));
  REQUIRE(g.has_edge(2, 3));
  REQUIRE(g.has_edge(0, 3));
  REQUIRE_FALSE(g.has_edge(0, 2));
  REQUIRE_FALSE(g.has_edge(1, 3));
  auto ob = hecke_obstruction(g);
  REQUIRE(ob.has_value());
  CHECK(ob->kind == HeckeObstruction::Cycle);
  CHECK(ob->vertices.size() >= 4);

  // star with 4 leaves: valency obstruction
  DiagonalBraiding star = from_ints({{-1, -1, -1, -1, -1},
                                     {1, -1, 1, 1, 1},
                                     {1, 1, -1, 1, 1},
                                     {1, 1, 1, -1, 1},
                                     {1, 1, 1, 1, -1}});
  auto ob2 = hecke_obstruction(gdd(star));
  REQUIRE(ob2.has_value());
  CHECK(ob2->kind == HeckeObstruction::Valency);
  CHECK(ob2->vertices.front() == 0);

  // triangles alone never obstruct
  DiagonalBraiding tri = from_ints({{-1, -1, 1}, {1, -1, -1}, {-1, 1, -1}});
  CHECK_FALSE(hecke_obstruction(gdd(tri)).has_value());
}

TEST_CASE("negative braidings are finite of exterior type") {
  Rng rng(77);
  for (int iter = 0; iter < 20; ++iter) {
    size_t n = 1 + rng.below(4);
    DiagonalBraiding b;
    b.q.assign(n, std::vector<Cyclotomic>(n, Cyclotomic(1)));
    for (size_t i = 0; i < n; ++i) {
      b.q[i][i] = Cyclotomic(-1);
      for (size_t j = i + 1; j < n; ++j) {
        // random off-diagonal pair with product 1
        Cyclotomic v = Cyclotomic::root(4, static_cast<long long>(rng.below(4)));
        b.q[i][j] = v;
        b.q[j][i] = v.inverse();
      }
    }
    REQUIRE(is_negative(b));
    auto a = cartan_data(b);
    REQUIRE(a.has_value());
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (i != j) CHECK(a->a[i][j] == 0);
    CHECK(is_finite_type(*a));
  }
  DiagonalBraiding notneg = from_ints({{-1, -1}, {1, -1}});
  CHECK_FALSE(is_negative(notneg));
  DiagonalBraiding wrong_diag = from_ints({{1}});
  CHECK_FALSE(is_negative(wrong_diag));
}
