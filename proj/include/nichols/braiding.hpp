#pragma once

// Diagonal braided vector spaces: q-matrices, generalized Dynkin diagrams,
// Cartan-type extraction, the finite-type test via positive principal minors
// of the symmetrized matrix, and the cycle/valency obstruction.

#include <optional>
#include <sstream>
#include <vector>

#include "nichols/chartab.hpp"
#include "nichols/cyclo.hpp"
#include "nichols/rack.hpp"

namespace nichols {

struct DiagonalBraiding {
  std::vector<std::vector<Cyclotomic>> q;  // θ x θ, all entries nonzero
  size_t dim() const { return q.size(); }
};

// q_{kl} = ρ(γ_{k,l}) for a degree-1 representation; well defined because the
// scalar does not depend on the choice of conjugating witnesses.
inline DiagonalBraiding braiding_from_witness(const SubrackWitness& w,
                                              const CharacterTable& table, size_t irrep) {
  if (table.degree(irrep) != 1)
    throw std::invalid_argument("braiding_from_witness: representation degree must be 1");
  size_t n = w.elements.size();
  DiagonalBraiding b;
  b.q.assign(n, std::vector<Cyclotomic>(n));
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) b.q[k][l] = table.character_at(irrep, w.gammas[k][l]);
  return b;
}

struct GDD {
  std::vector<Cyclotomic> vertex;                       // q_{ii}
  std::vector<std::vector<std::optional<Cyclotomic>>> edge;  // label when q_ij q_ji != 1

  size_t dim() const { return vertex.size(); }
  bool has_edge(size_t i, size_t j) const { return edge[i][j].has_value(); }

  std::string render() const {
    std::ostringstream os;
    os << "gdd " << dim() << "\n";
    for (size_t i = 0; i < dim(); ++i) os << "  v" << i << " : " << vertex[i].to_string() << "\n";
    for (size_t i = 0; i < dim(); ++i)
      for (size_t j = i + 1; j < dim(); ++j)
        if (has_edge(i, j)) os << "  v" << i << " -- v" << j << " : " << edge[i][j]->to_string() << "\n";
    return os.str();
  }
};

inline GDD gdd(const DiagonalBraiding& b) {
  size_t n = b.dim();
  GDD g;
  g.vertex.resize(n);
  g.edge.assign(n, std::vector<std::optional<Cyclotomic>>(n));
  for (size_t i = 0; i < n; ++i) g.vertex[i] = b.q[i][i];
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Cyclotomic prod = b.q[i][j] * b.q[j][i];
      if (prod != Cyclotomic(1)) g.edge[i][j] = prod;
    }
  return g;
}

struct CartanMatrix {
  std::vector<std::vector<int>> a;
  size_t dim() const { return a.size(); }
};

// Extracts Cartan data: a_{ij} in (-ord q_ii, 0] with q_ij q_ji = q_ii^{a_ij}.
// Empty when some diagonal entry is 1 / not a root of unity, or some pair has
// no admissible exponent. `ambiguous` reports non-unique exponents.
inline std::optional<CartanMatrix> cartan_data(const DiagonalBraiding& b,
                                               bool* ambiguous = nullptr) {
  size_t n = b.dim();
  if (ambiguous) *ambiguous = false;
  std::vector<uint64_t> ord(n);
  for (size_t i = 0; i < n; ++i) {
    auto r = b.q[i][i].as_root_of_unity();
    if (!r || r->first == 1) return std::nullopt;  // q_ii must be a root of unity != 1
    ord[i] = r->first;
  }
  CartanMatrix cm;
  cm.a.assign(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i) cm.a[i][i] = 2;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Cyclotomic prod = b.q[i][j] * b.q[j][i];
      std::optional<int> found;
      Cyclotomic pw(1);
      Cyclotomic qinv = b.q[i][i].inverse();
      for (int e = 0; static_cast<uint64_t>(-e) < ord[i]; --e) {
        if (prod == pw) {
          if (!found)
            found = e;
          else if (ambiguous)
            *ambiguous = true;
        }
        pw = pw * qinv;
      }
      if (!found) return std::nullopt;
      cm.a[i][j] = *found;
    }
  return cm;
}

// Finite type iff the matrix is a symmetrizable generalized Cartan matrix
// whose symmetrization is positive definite (checked by exact leading
// principal minors).
inline bool is_finite_type(const CartanMatrix& cm) {
  size_t n = cm.dim();
  for (size_t i = 0; i < n; ++i) {
    if (cm.a[i][i] != 2) return false;
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cm.a[i][j] > 0) return false;
      if ((cm.a[i][j] == 0) != (cm.a[j][i] == 0)) return false;
    }
  }
  // symmetrizing weights via graph traversal
  std::vector<Rat> d(n, Rat(0));
  for (size_t root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    std::vector<size_t> stack{root};
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < n; ++j) {
        if (i == j || cm.a[i][j] == 0) continue;
        Rat want = d[i] * Rat(cm.a[i][j]) / Rat(cm.a[j][i]);
        if (d[j] == 0) {
          d[j] = want;
          stack.push_back(j);
        }
      }
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (d[i] * Rat(cm.a[i][j]) != d[j] * Rat(cm.a[j][i])) return false;  // not symmetrizable

  // leading principal minors of (d_i a_ij) must all be positive
  std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) s[i][j] = d[i] * Rat(cm.a[i][j]);
  for (size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) m[i][j] = s[i][j];
    // determinant by fraction-free-ish Gaussian elimination
    Rat det = 1;
    for (size_t c = 0; c < k; ++c) {
      size_t piv = c;
      while (piv < k && m[piv][c] == 0) ++piv;
      if (piv == k) {
        det = 0;
        break;
      }
      if (piv != c) {
        std::swap(m[piv], m[c]);
        det = -det;
      }
      det *= m[c][c];
      Rat ic = Rat(1) / m[c][c];
      for (size_t i = c + 1; i < k; ++i) {
        Rat f = m[i][c] * ic;
        for (size_t j = c; j < k; ++j) m[i][j] -= f * m[c][j];
      }
    }
    if (det <= 0) return false;
  }
  return true;
}

// Obstruction from the shape of the generalized Dynkin diagram: a vertex of
// valency greater than 3, or a cycle of length at least 4.
struct HeckeObstruction {
  enum Kind { Valency, Cycle } kind;
  std::vector<size_t> vertices;  // the high-valency vertex with its neighbors, or the cycle
};

namespace braiding_detail {

// Two internally-vertex-disjoint u-v paths via 2 rounds of augmentation on
// the vertex-split digraph; returns the concatenated cycle.
inline std::optional<std::vector<size_t>> disjoint_cycle_through(
    const std::vector<std::vector<char>>& adj, size_t u, size_t v) {
  size_t n = adj.size();
  // vertex-split: node 2i = in, 2i+1 = out; capacity 1 on i_in->i_out except
  // endpoints. Edges out->in per adjacency.
  size_t N = 2 * n;
  std::vector<std::map<size_t, int>> cap(N);
  for (size_t i = 0; i < n; ++i) cap[2 * i][2 * i + 1] = (i == u || i == v) ? 2 : 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (adj[i][j]) cap[2 * i + 1][2 * j] = 1;
  size_t src = 2 * u + 1, dst = 2 * v;
  int flow = 0;
  for (int round = 0; round < 2; ++round) {
    // BFS augmenting path
    std::vector<int> prev(N, -1);
    std::vector<size_t> queue{src};
    prev[src] = static_cast<int>(src);
    for (size_t head = 0; head < queue.size() && prev[dst] < 0; ++head) {
      size_t x = queue[head];
      for (const auto& [y, c] : cap[x]) {
        if (c > 0 && prev[y] < 0) {
          prev[y] = static_cast<int>(x);
          queue.push_back(y);
        }
      }
    }
    if (prev[dst] < 0) break;
    size_t x = dst;
    while (x != src) {
      size_t p = static_cast<size_t>(prev[x]);
      cap[p][x] -= 1;
      cap[x][p] += 1;
      x = p;
    }
    ++flow;
  }
  if (flow < 2) return std::nullopt;
  // decode the two paths from the residual flow
  std::vector<std::vector<size_t>> paths;
  std::vector<std::map<size_t, int>> used(N);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (adj[i][j]) {
        int f = 1 - cap[2 * i + 1][2 * j];
        if (f > 0) used[2 * i + 1][2 * j] = f;
      }
  for (int round = 0; round < 2; ++round) {
    std::vector<size_t> path{u};
    size_t x = src;
    while (x != dst) {
      bool advanced = false;
      for (auto& [y, f] : used[x]) {
        if (f > 0) {
          f -= 1;
          path.push_back(y / 2);
          x = (y == dst) ? y : y + 1;  // hop through the split node
          advanced = true;
          break;
        }
      }
      if (!advanced) return std::nullopt;
    }
    paths.push_back(std::move(path));
  }
  // concatenate: u .. v reversed-back .. u
  std::vector<size_t> cycle = paths[0];
  for (size_t i = paths[1].size() - 1; i-- > 1;) cycle.push_back(paths[1][i]);
  return cycle;
}

}  // namespace braiding_detail

inline std::optional<HeckeObstruction> hecke_obstruction(const GDD& g) {
  size_t n = g.dim();
  for (size_t i = 0; i < n; ++i) {
    auto r = g.vertex[i].as_root_of_unity();
    if (!r) throw std::invalid_argument("hecke_obstruction: vertex label not a root of unity");
  }
  // valency
  for (size_t i = 0; i < n; ++i) {
    std::vector<size_t> nb;
    for (size_t j = 0; j < n; ++j)
      if (j != i && g.has_edge(i, j)) nb.push_back(j);
    if (nb.size() > 3) {
      HeckeObstruction ob;
      ob.kind = HeckeObstruction::Valency;
      ob.vertices.push_back(i);
      for (size_t j : nb) ob.vertices.push_back(j);
      return ob;
    }
  }
  // cycle of length >= 4: exists iff some biconnected component has >= 4
  // vertices; build an explicit one.
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && g.has_edge(i, j)) adj[i][j] = 1;
  for (size_t u = 0; u < n; ++u)
    for (size_t v = u + 1; v < n; ++v) {
      if (adj[u][v]) continue;  // cycles through non-adjacent pairs have length >= 4
      auto cyc = braiding_detail::disjoint_cycle_through(adj, u, v);
      if (cyc && cyc->size() >= 4) {
        HeckeObstruction ob;
        ob.kind = HeckeObstruction::Cycle;
        ob.vertices = *cyc;
        return ob;
      }
    }
  // adjacent pairs: a 4-clique forces a 4-cycle
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c)
        for (size_t d = c + 1; d < n; ++d)
          if (adj[a][b] && adj[b][c] && adj[c][d] && adj[d][a]) {
            HeckeObstruction ob;
            ob.kind = HeckeObstruction::Cycle;
            ob.vertices = {a, b, c, d};
            return ob;
          }
  return std::nullopt;
}

// Exterior-type test: q_kk = -1 and q_kl q_lk = 1 for all pairs.
inline bool is_negative(const DiagonalBraiding& b) {
  size_t n = b.dim();
  for (size_t i = 0; i < n; ++i) {
    if (b.q[i][i] != Cyclotomic(-1)) return false;
    for (size_t j = 0; j < n; ++j)
      if (i != j && b.q[i][j] * b.q[j][i] != Cyclotomic(1)) return false;
  }
  return true;
}

}  // namespace nichols
