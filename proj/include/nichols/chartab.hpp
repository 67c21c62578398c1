#pragma once

// Character tables. Exact computation via the Burnside-Dixon method for
// fully enumerable groups: class-sum structure constants, simultaneous
// eigenvector splitting over a prime field F_p with p = 1 (mod exponent),
// then exact cyclotomic lifting through power maps.

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nichols/cyclo.hpp"
#include "nichols/elements.hpp"
#include "nichols/group.hpp"
#include "nichols/perm.hpp"

namespace nichols {

namespace fp {

inline uint64_t mul(uint64_t a, uint64_t b, uint64_t p) {
  return (__uint128_t)a * b % p;
}
inline uint64_t add(uint64_t a, uint64_t b, uint64_t p) { return (a + b) % p; }
inline uint64_t sub(uint64_t a, uint64_t b, uint64_t p) { return (a + p - b % p) % p; }
inline uint64_t pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}
inline uint64_t inv(uint64_t a, uint64_t p) { return pow(a % p, p - 2, p); }

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest generator of F_p^*.
inline uint64_t primitive_root(uint64_t p) {
  uint64_t phi = p - 1;
  std::vector<uint64_t> prime_factors;
  uint64_t m = phi;
  for (uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (uint64_t q : prime_factors)
      if (pow(g, phi / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

using Mat = std::vector<std::vector<uint64_t>>;

// Characteristic polynomial of an m x m matrix mod p (Hessenberg reduction,
// then the leading-minor recurrence). Coefficients little-endian.
inline std::vector<uint64_t> char_poly(Mat a, uint64_t p) {
  size_t m = a.size();
  // reduce to upper Hessenberg by similarity
  for (size_t col = 0; col + 2 < m; ++col) {
    size_t piv = col + 1;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[col + 1]);
    for (size_t i = 0; i < m; ++i) std::swap(a[i][piv], a[i][col + 1]);
    uint64_t d = inv(a[col + 1][col], p);
    for (size_t i = col + 2; i < m; ++i) {
      uint64_t f = mul(a[i][col], d, p);
      if (f == 0) continue;
      for (size_t j = 0; j < m; ++j) a[i][j] = sub(a[i][j], mul(f, a[col + 1][j], p), p);
      for (size_t j = 0; j < m; ++j) a[j][col + 1] = add(a[j][col + 1], mul(f, a[j][i], p), p);
    }
  }
  // q_k(λ) = det(λ I_k - H_k) over the leading minors of the Hessenberg form
  std::vector<std::vector<uint64_t>> minors(m + 1);
  minors[0] = {1};
  for (size_t k = 1; k <= m; ++k) {
    // (λ - h_{kk}) * q_{k-1}
    std::vector<uint64_t> acc(k + 1, 0);
    const auto& prev = minors[k - 1];
    uint64_t hkk = a[k - 1][k - 1];
    for (size_t i = 0; i < prev.size(); ++i) {
      acc[i + 1] = add(acc[i + 1], prev[i], p);
      acc[i] = sub(acc[i], mul(hkk, prev[i], p), p);
    }
    uint64_t subprod = 1;
    for (size_t mm = 1; mm < k; ++mm) {
      subprod = mul(subprod, a[k - mm][k - mm - 1], p);
      if (subprod == 0) break;
      uint64_t coeff = mul(a[k - mm - 1][k - 1], subprod, p);
      if (coeff != 0) {
        const auto& pj = minors[k - mm - 1];
        for (size_t i = 0; i < pj.size(); ++i) acc[i] = sub(acc[i], mul(coeff, pj[i], p), p);
      }
    }
    minors[k] = std::move(acc);
  }
  return minors[m];
}

inline uint64_t poly_eval(const std::vector<uint64_t>& poly, uint64_t x, uint64_t p) {
  uint64_t v = 0;
  for (size_t i = poly.size(); i-- > 0;) v = add(mul(v, x, p), poly[i], p);
  return v;
}

// Basis (as rows, reduced row echelon form) of the kernel of a.
inline Mat kernel(Mat a, uint64_t p) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col_of_row;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    uint64_t d = inv(a[r][c], p);
    for (size_t j = 0; j < cols; ++j) a[r][j] = mul(a[r][j], d, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      uint64_t f = a[i][c];
      for (size_t j = 0; j < cols; ++j) a[i][j] = sub(a[i][j], mul(f, a[r][j], p), p);
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col_of_row) is_pivot[static_cast<size_t>(c)] = true;
  Mat basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<uint64_t> v(cols, 0);
    v[free_c] = 1;
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
      v[static_cast<size_t>(pivot_col_of_row[i])] = sub(0, a[i][free_c], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Row-reduces in place; returns pivot columns.
inline std::vector<size_t> rref(Mat& a, uint64_t p) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    uint64_t d = inv(a[r][c], p);
    for (size_t j = 0; j < cols; ++j) a[r][j] = mul(a[r][j], d, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      uint64_t f = a[i][c];
      for (size_t j = 0; j < cols; ++j) a[i][j] = sub(a[i][j], mul(f, a[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  while (a.size() > pivots.size()) a.pop_back();
  return pivots;
}

}  // namespace fp

class CharacterTable {
public:
  struct ClassInfo {
    uint64_t order = 1;
    uint64_t size = 1;
    std::optional<Perm> rep;
  };

  uint64_t group_order = 1;
  unsigned group_degree = 1;
  std::string group_digest;
  std::vector<ClassInfo> classes;
  // power_maps[p][c] = class of x^p for x in class c, for primes p <= exponent
  std::map<unsigned, std::vector<uint32_t>> power_maps;
  std::vector<std::vector<Cyclotomic>> rows;  // rows[i][c]

  // Present for computed (fully enumerated) tables; enables element lookups.
  std::shared_ptr<const ElementTable> elems;

  size_t class_count() const { return classes.size(); }
  size_t irrep_count() const { return rows.size(); }

  uint32_t identity_class() const {
    for (uint32_t c = 0; c < classes.size(); ++c)
      if (classes[c].order == 1) return c;
    throw std::logic_error("CharacterTable: no identity class");
  }

  uint64_t degree(size_t i) const {
    return static_cast<uint64_t>(
        Rat(rows[i][identity_class()].rational_value()).convert_to<Int>().convert_to<uint64_t>());
  }

  uint64_t exponent() const {
    uint64_t e = 1;
    for (const auto& c : classes) e = std::lcm(e, c.order);
    return e;
  }

  uint32_t power_class(uint32_t c, uint64_t k) const {
    uint64_t o = classes[c].order;
    k %= o;
    if (k == 0) return identity_class();
    uint32_t cur = c;
    // factor k and compose prime maps
    for (unsigned p = 2; k > 1; ++p) {
      while (k % p == 0) {
        auto it = power_maps.find(p);
        if (it == power_maps.end()) throw std::logic_error("power_class: missing prime map");
        cur = it->second[cur];
        k /= p;
      }
    }
    return cur;
  }

  uint32_t inverse_class(uint32_t c) const {
    return power_class(c, classes[c].order - 1);
  }

  uint32_t class_of(const Perm& x) const {
    if (!elems) throw std::logic_error("class_of: table has no element lookup");
    return elems->class_of_element(x);
  }

  const Cyclotomic& value(size_t irrep, uint32_t cls) const { return rows[irrep][cls]; }

  Cyclotomic character_at(size_t irrep, const Perm& x) const {
    return rows[irrep][class_of(x)];
  }

  // χ(s)/χ(1) for s central in the group (class size 1).
  Cyclotomic q_scalar(size_t irrep, const Perm& s) const {
    uint32_t c = class_of(s);
    if (classes[c].size != 1)
      throw std::invalid_argument("q_scalar: element is not central");
    return rows[irrep][c] / Cyclotomic(Rat(static_cast<long long>(degree(irrep))));
  }

  // Eigenvalue multiset of ρ(σ): exponent j (of ζ_r, r = |σ|) -> multiplicity.
  std::map<unsigned, uint64_t> eigenvalue_multiset(size_t irrep, const Perm& sigma) const {
    if (!elems) throw std::logic_error("eigenvalue_multiset: table has no element lookup");
    unsigned r = static_cast<unsigned>(sigma.order());
    std::vector<Cyclotomic> chi_pow(r);
    Perm cur(sigma.degree());
    for (unsigned t = 0; t < r; ++t) {
      chi_pow[t] = rows[irrep][class_of(cur)];
      cur = cur * sigma;
    }
    std::map<unsigned, uint64_t> out;
    uint64_t total = 0;
    for (unsigned j = 0; j < r; ++j) {
      Cyclotomic m(0);
      for (unsigned t = 0; t < r; ++t)
        m = m + chi_pow[t] * Cyclotomic::root(r, -static_cast<long long>(j) * t);
      m = m * Cyclotomic(Rat(1, r));
      Rat mr;
      try {
        mr = m.rational_value();
      } catch (const std::domain_error&) {
        throw std::runtime_error("eigenvalue_multiset: non-integral multiplicity");
      }
      if (denominator(mr) != 1 || mr < 0)
        throw std::runtime_error("eigenvalue_multiset: non-integral multiplicity");
      uint64_t mi = numerator(mr).convert_to<uint64_t>();
      if (mi) out[j] = mi;
      total += mi;
    }
    if (total != degree(irrep))
      throw std::runtime_error("eigenvalue_multiset: multiplicities do not sum to degree");
    return out;
  }

  // Exact validation of both orthogonality relations and degree identities.
  void validate() const {
    size_t r = classes.size();
    if (rows.size() != r) throw std::runtime_error("table: not square");
    uint64_t sizes = 0, sq = 0;
    for (const auto& c : classes) sizes += c.size;
    if (sizes != group_order) throw std::runtime_error("table: class sizes do not sum to |G|");
    for (size_t i = 0; i < r; ++i) sq += degree(i) * degree(i);
    if (sq != group_order) throw std::runtime_error("table: sum of squared degrees != |G|");

    std::vector<uint32_t> invc(r);
    for (uint32_t c = 0; c < r; ++c) invc[c] = inverse_class(c);

    // column orthogonality
    for (uint32_t c = 0; c < r; ++c) {
      for (uint32_t d = 0; d < r; ++d) {
        Cyclotomic sum(0);
        for (size_t i = 0; i < r; ++i) sum = sum + rows[i][c] * rows[i][invc[d]];
        Cyclotomic want =
            (c == d) ? Cyclotomic(Rat(group_order / classes[c].size)) : Cyclotomic(0);
        if (sum != want) throw std::runtime_error("table: column orthogonality fails");
      }
    }
    // row orthogonality
    for (size_t i = 0; i < r; ++i) {
      for (size_t j = 0; j < r; ++j) {
        Cyclotomic sum(0);
        for (uint32_t c = 0; c < r; ++c)
          sum = sum + Cyclotomic(Rat(classes[c].size)) * rows[i][c] * rows[j][invc[c]];
        Cyclotomic want = (i == j) ? Cyclotomic(Rat(group_order)) : Cyclotomic(0);
        if (sum != want) throw std::runtime_error("table: row orthogonality fails");
      }
    }
  }
};

namespace dixon_detail {

inline uint64_t isqrt(uint64_t n) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace dixon_detail

// Burnside-Dixon character table of a fully enumerable group.
inline CharacterTable burnside_dixon(const PermGroup& G, uint64_t enum_budget = 100000) {
  CharacterTable T;
  T.group_order = G.order();
  T.group_degree = G.degree();
  auto tab = std::make_shared<const ElementTable>(G, enum_budget);
  T.elems = tab;

  const size_t r = tab->class_count();
  T.classes.resize(r);
  for (uint32_t c = 0; c < r; ++c) {
    T.classes[c].order = tab->class_rep(c).order();
    T.classes[c].size = tab->class_size(c);
    T.classes[c].rep = tab->class_rep(c);
  }

  uint64_t expo = T.exponent();
  // power maps for every prime up to the largest element order; higher prime
  // maps reduce to these through power_class
  uint64_t max_order = 1;
  for (const auto& c : T.classes) max_order = std::max(max_order, c.order);
  for (unsigned p = 2; p <= max_order; ++p) {
    if (!fp::is_prime(p)) continue;
    std::vector<uint32_t> pm(r);
    for (uint32_t c = 0; c < r; ++c)
      pm[c] = tab->class_of_element(tab->class_rep(c).power(p));
    T.power_maps[p] = std::move(pm);
  }

  // Dixon prime: smallest p = 1 (mod exponent), p > 2*sqrt(|G|), p coprime to |G|.
  uint64_t p = 0;
  {
    uint64_t lo = 2 * dixon_detail::isqrt(G.order()) + 1;
    uint64_t cand = (lo / expo) * expo + 1;
    while (cand <= lo || !fp::is_prime(cand) || G.order() % cand == 0) cand += expo;
    p = cand;
  }

  // structure constants: a[j][k][l] with rows/cols as described in the class
  // algebra relation C_j C_k = sum_l a_{jkl} C_l
  std::vector<uint32_t> class_of_elem(tab->size());
  for (uint32_t c = 0; c < r; ++c)
    for (uint32_t e : tab->class_members(c)) class_of_elem[e] = c;

  std::vector<fp::Mat> class_mats(r, fp::Mat(r, std::vector<uint64_t>(r, 0)));
  for (uint32_t j = 0; j < r; ++j) {
    for (uint32_t x : tab->class_members(j)) {
      Perm xin = tab->element(x).inverse();
      for (uint32_t l = 0; l < r; ++l) {
        Perm y = xin * tab->class_rep(l);
        uint32_t k = class_of_elem[tab->index_of(y)];
        // contributes to a_{j,k,l}
        class_mats[j][k][l] = (class_mats[j][k][l] + 1) % p;
      }
    }
  }

  // simultaneous eigenspace splitting
  std::vector<fp::Mat> spaces;
  {
    fp::Mat full(r, std::vector<uint64_t>(r, 0));
    for (size_t i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (uint32_t j = 0; j < r; ++j) {
    bool all_one = true;
    for (const auto& sp : spaces) all_one = all_one && sp.size() == 1;
    if (all_one) break;
    std::vector<fp::Mat> next;
    for (auto& sp : spaces) {
      size_t m = sp.size();
      if (m == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      // coordinates of M_j restricted to the subspace (rows are RREF basis)
      fp::Mat basis = sp;
      std::vector<size_t> pivots = fp::rref(basis, p);
      fp::Mat A(m, std::vector<uint64_t>(m, 0));
      for (size_t i = 0; i < m; ++i) {
        // image of basis vector i: (M v)_k = sum_l M[k][l] v_l
        std::vector<uint64_t> img(r, 0);
        for (size_t kk = 0; kk < r; ++kk) {
          uint64_t acc = 0;
          for (size_t ll = 0; ll < r; ++ll)
            acc = fp::add(acc, fp::mul(class_mats[j][kk][ll], basis[i][ll], p), p);
          img[kk] = acc;
        }
        for (size_t t = 0; t < m; ++t) A[t][i] = img[pivots[t]];
        // verify the image stays inside the subspace
        std::vector<uint64_t> recon(r, 0);
        for (size_t t = 0; t < m; ++t)
          for (size_t kk = 0; kk < r; ++kk)
            recon[kk] = fp::add(recon[kk], fp::mul(A[t][i], basis[t][kk], p), p);
        if (recon != img) throw std::logic_error("dixon: subspace not invariant");
      }
      auto cp = fp::char_poly(A, p);
      std::vector<uint64_t> eigs;
      for (uint64_t lam = 0; lam < p; ++lam)
        if (fp::poly_eval(cp, lam, p) == 0) eigs.push_back(lam);
      if (eigs.size() <= 1) {
        next.push_back(std::move(basis));
        continue;
      }
      for (uint64_t lam : eigs) {
        fp::Mat shifted = A;
        for (size_t i = 0; i < m; ++i) shifted[i][i] = fp::sub(shifted[i][i], lam, p);
        fp::Mat ker = fp::kernel(shifted, p);
        // lift kernel coordinates to ambient vectors
        fp::Mat lifted;
        for (const auto& kv : ker) {
          std::vector<uint64_t> v(r, 0);
          for (size_t t = 0; t < m; ++t)
            for (size_t kk = 0; kk < r; ++kk)
              v[kk] = fp::add(v[kk], fp::mul(kv[t], basis[t][kk], p), p);
          lifted.push_back(std::move(v));
        }
        if (!lifted.empty()) next.push_back(std::move(lifted));
      }
    }
    spaces = std::move(next);
  }
  for (const auto& sp : spaces)
    if (sp.size() != 1) throw std::logic_error("dixon: splitting incomplete");
  if (spaces.size() != r) throw std::logic_error("dixon: wrong eigenvector count");

  // root of unity tables in F_p, consistent across orders
  uint64_t g = fp::primitive_root(p);
  auto zeta = [&](uint64_t order) { return fp::pow(g, (p - 1) / order, p); };

  uint32_t idc = 0;
  for (uint32_t c = 0; c < r; ++c)
    if (T.classes[c].order == 1) idc = c;

  std::vector<uint32_t> invc(r);
  for (uint32_t c = 0; c < r; ++c) invc[c] = T.power_class(c, T.classes[c].order - 1);

  uint64_t sq_order = dixon_detail::isqrt(G.order());
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& sp : spaces) {
    std::vector<uint64_t> w = sp[0];
    if (w[idc] == 0) throw std::logic_error("dixon: eigenvector with zero identity coord");
    uint64_t scale = fp::inv(w[idc], p);
    for (auto& x : w) x = fp::mul(x, scale, p);

    // degree from the norm equation
    uint64_t denom = 0;
    for (uint32_t c = 0; c < r; ++c)
      denom = fp::add(denom, fp::mul(fp::mul(w[c], w[invc[c]], p),
                                     fp::inv(T.classes[c].size % p, p), p),
                      p);
    uint64_t d2 = fp::mul(G.order() % p, fp::inv(denom, p), p);
    uint64_t d = 0;
    for (uint64_t t = 1; t <= p / 2; ++t)
      if (fp::mul(t, t, p) == d2) {
        d = (t <= sq_order) ? t : p - t;
        break;
      }
    if (d == 0 || d > sq_order) throw std::logic_error("dixon: degree recovery failed");

    // character values mod p, then exact lift via eigenvalue multiplicities
    std::vector<uint64_t> chi_mod(r);
    for (uint32_t c = 0; c < r; ++c)
      chi_mod[c] = fp::mul(fp::mul(d % p, w[c], p), fp::inv(T.classes[c].size % p, p), p);

    std::vector<Cyclotomic> row(r);
    for (uint32_t c = 0; c < r; ++c) {
      uint64_t o = T.classes[c].order;
      uint64_t zo = zeta(o);
      uint64_t oin = fp::inv(o % p, p);
      Cyclotomic val(0);
      for (uint64_t t = 0; t < o; ++t) {
        uint64_t mt = 0;
        for (uint64_t k = 0; k < o; ++k) {
          uint64_t cls = T.power_class(c, k);
          uint64_t zpow = fp::pow(zo, (o - (t * k) % o) % o, p);
          mt = fp::add(mt, fp::mul(chi_mod[cls], zpow, p), p);
        }
        mt = fp::mul(mt, oin, p);
        if (mt > d) throw std::logic_error("dixon: non-integral eigenvalue multiplicity");
        if (mt)
          val = val + Cyclotomic(Rat(mt)) * Cyclotomic::root(static_cast<unsigned>(o),
                                                             static_cast<long long>(t));
      }
      row[c] = val;
    }
    if (row[idc] != Cyclotomic(Rat(d))) throw std::logic_error("dixon: lifted degree mismatch");
    rows.push_back(std::move(row));
  }

  // canonical row order: by degree, then lexicographic on serialized values
  std::vector<size_t> order(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) order[i] = i;
  auto row_key = [&](size_t i) {
    std::string key;
    for (const auto& v : rows[i]) {
      key += v.to_string();
      key += '|';
    }
    return key;
  };
  std::vector<std::string> keys(rows.size());
  std::vector<uint64_t> degs(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    keys[i] = row_key(i);
    degs[i] = rows[i][idc].rational_value().convert_to<Int>().convert_to<uint64_t>();
  }
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (degs[a] != degs[b]) return degs[a] < degs[b];
    return keys[a] < keys[b];
  });
  for (size_t i : order) T.rows.push_back(std::move(rows[i]));

  T.validate();
  return T;
}

}  // namespace nichols
