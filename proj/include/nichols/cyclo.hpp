#pragma once

// Exact arithmetic in cyclotomic fields Q(ζ_n): power basis modulo the n-th
// cyclotomic polynomial, arbitrary-precision rational coefficients. No
// floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nichols {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

namespace cyclo_detail {

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> ds;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Integer polynomials, little-endian coefficients.
using IPoly = std::vector<Int>;

inline void itrim(IPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division num / den for monic den.
inline IPoly idiv_exact(IPoly num, const IPoly& den) {
  IPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, Int(0));
  while (num.size() >= den.size() && !(num.size() == 1 && num[0] == 0)) {
    size_t shift = num.size() - den.size();
    Int c = num.back();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    itrim(num);
    if (num.size() < den.size()) break;
  }
  itrim(q);
  return q;
}

// Φ_n, cached. Computed from x^n - 1 = Π_{d|n} Φ_d.
inline const IPoly& cyclotomic_poly(unsigned n) {
  static std::map<unsigned, IPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<const IPoly&(unsigned)> get = [&](unsigned m) -> const IPoly& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    IPoly xm1(m + 1, Int(0));
    xm1[0] = -1;
    xm1[m] = 1;
    for (unsigned d : divisors(m))
      if (d != m) xm1 = idiv_exact(std::move(xm1), get(d));
    return cache.emplace(m, std::move(xm1)).first->second;
  };
  return get(n);
}

// Rational polynomial reduced modulo the monic integer polynomial `mod`.
inline void reduce_mod(std::vector<Rat>& p, const IPoly& mod) {
  size_t deg = mod.size() - 1;
  while (p.size() > deg) {
    Rat c = p.back();
    size_t shift = p.size() - 1 - deg;
    if (c != 0)
      for (size_t i = 0; i < deg; ++i) p[shift + i] -= c * Rat(mod[i]);
    p.pop_back();
  }
  p.resize(deg, Rat(0));
}

}  // namespace cyclo_detail

class Cyclotomic {
public:
  Cyclotomic() : n_(1), c_{Rat(0)} {}
  Cyclotomic(int v) : n_(1), c_{Rat(v)} {}  // NOLINT: implicit by design
  Cyclotomic(const Rat& v) : n_(1), c_{v} {}

  // ζ_n^k, canonically reduced to the primitive order.
  static Cyclotomic root(unsigned n, long long k) {
    if (n == 0) throw std::invalid_argument("root_of_unity: n must be positive");
    long long kk = k % static_cast<long long>(n);
    if (kk < 0) kk += n;
    unsigned g = std::gcd(static_cast<unsigned>(kk), n);
    if (kk == 0) g = n;
    unsigned r = n / g;
    unsigned e = static_cast<unsigned>(kk) / g;
    Cyclotomic out;
    out.n_ = r;
    out.c_.assign(cyclo_detail::euler_phi(r), Rat(0));
    std::vector<Rat> poly(e + 1, Rat(0));
    poly[e] = 1;
    cyclo_detail::reduce_mod(poly, cyclo_detail::cyclotomic_poly(r));
    out.c_ = std::move(poly);
    return out;
  }

  unsigned conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return normalized().is_rational_reduced();
    return true;
  }

  // Value as a rational; throws when not rational.
  Rat rational_value() const {
    Cyclotomic nrm = normalized();
    if (!nrm.is_rational_reduced())
      throw std::domain_error("Cyclotomic: value is not rational");
    return nrm.c_[0];
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y, n] = lift_pair(a, b);
    Cyclotomic out;
    out.n_ = n;
    out.c_.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) out.c_[i] = x[i] + y[i];
    return out;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    return a + (-b);
  }

  Cyclotomic operator-() const {
    Cyclotomic out = *this;
    for (Rat& x : out.c_) x = -x;
    return out;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y, n] = lift_pair(a, b);
    std::vector<Rat> prod(x.size() + y.size() - 1, Rat(0));
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (size_t j = 0; j < y.size(); ++j) {
        if (y[j] == 0) continue;
        prod[i + j] += x[i] * y[j];
      }
    }
    cyclo_detail::reduce_mod(prod, cyclo_detail::cyclotomic_poly(n));
    Cyclotomic out;
    out.n_ = n;
    out.c_ = std::move(prod);
    return out;
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
    // Extended Euclid in Q[x] against Φ_n.
    const auto& phi = cyclo_detail::cyclotomic_poly(n_);
    std::vector<Rat> r0(phi.begin(), phi.end());
    std::vector<Rat> r1 = c_;
    trim(r1);
    std::vector<Rat> u0{Rat(0)}, u1{Rat(1)};
    while (!(r1.size() == 1 && r1[0] == 0)) {
      auto [q, rem] = divmod(r0, r1);
      std::vector<Rat> u2 = sub(u0, mul(q, u1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      u0 = std::move(u1);
      u1 = std::move(u2);
    }
    if (r0.size() != 1 || r0[0] == 0)
      throw std::logic_error("Cyclotomic: inverse failed (element not invertible)");
    Rat scale = Rat(1) / r0[0];
    for (Rat& x : u0) x *= scale;
    cyclo_detail::reduce_mod(u0, phi);
    Cyclotomic out;
    out.n_ = n_;
    out.c_ = std::move(u0);
    return out;
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  // Galois automorphism ζ -> ζ^a for gcd(a, n) = 1.
  Cyclotomic galois(long long a) const {
    long long aa = a % static_cast<long long>(n_);
    if (aa < 0) aa += n_;
    if (std::gcd(static_cast<unsigned>(aa), n_) != 1)
      throw std::invalid_argument("Cyclotomic::galois: exponent not coprime to conductor");
    std::vector<Rat> poly(n_, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
      poly[(i * static_cast<size_t>(aa)) % n_] += c_[i];
    cyclo_detail::reduce_mod(poly, cyclo_detail::cyclotomic_poly(n_));
    Cyclotomic out;
    out.n_ = n_;
    out.c_ = std::move(poly);
    return out;
  }

  // Complex conjugation ζ -> ζ^{-1}.
  Cyclotomic conj() const { return n_ == 1 ? *this : galois(static_cast<long long>(n_) - 1); }

  bool is_real() const { return *this == conj(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y, n] = lift_pair(a, b);
    (void)n;
    return x == y;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Embeds into Q(ζ_m); m must be a multiple of the conductor.
  Cyclotomic embed(unsigned m) const {
    if (m % n_ != 0) throw std::invalid_argument("Cyclotomic::embed: not a multiple");
    if (m == n_) return *this;
    unsigned stretch = m / n_;
    std::vector<Rat> poly(static_cast<size_t>(c_.size() - 1) * stretch + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) poly[i * stretch] = c_[i];
    cyclo_detail::reduce_mod(poly, cyclo_detail::cyclotomic_poly(m));
    Cyclotomic out;
    out.n_ = m;
    out.c_ = std::move(poly);
    return out;
  }

  // Minimal-conductor representative of the same value.
  Cyclotomic normalized() const {
    Cyclotomic cur = *this;
    bool changed = true;
    while (changed && cur.n_ > 1) {
      changed = false;
      for (unsigned d : cyclo_detail::divisors(cur.n_)) {
        if (d == cur.n_) continue;
        auto down = cur.try_reduce_to(d);
        if (down) {
          cur = *down;
          changed = true;
          break;
        }
      }
    }
    return cur;
  }

  // (order r, exponent k) with value = ζ_r^k and gcd(k, r) = 1; empty when
  // the value is not a root of unity.
  std::optional<std::pair<unsigned, unsigned>> as_root_of_unity() const {
    if (is_zero()) return std::nullopt;
    Cyclotomic nrm = normalized();
    if (nrm * nrm.conj() != Cyclotomic(1)) return std::nullopt;
    // Roots of unity in Q(ζ_n) have order dividing n (even n) or 2n (odd n).
    unsigned m = nrm.n_ % 2 == 0 ? nrm.n_ : 2 * nrm.n_;
    for (unsigned r : cyclo_detail::divisors(m)) {
      if (r == 1) {
        if (nrm == Cyclotomic(1)) return std::make_pair(1u, 0u);
        continue;
      }
      for (unsigned k = 1; k < r; ++k) {
        if (std::gcd(k, r) != 1) continue;
        if (nrm == root(r, k)) return std::make_pair(r, k);
      }
    }
    return std::nullopt;
  }

  uint64_t root_order() const {
    auto r = as_root_of_unity();
    if (!r) throw std::domain_error("Cyclotomic: not a root of unity");
    return r->first;
  }

  // "c0 + c1*z(n)^1 + ..." with exact rationals, minimal conductor.
  std::string to_string() const {
    Cyclotomic nrm = normalized();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < nrm.c_.size(); ++i) {
      if (nrm.c_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << nrm.c_[i];
      } else {
        os << nrm.c_[i] << "*z(" << nrm.n_ << ")^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }

  static Cyclotomic from_string(const std::string& text) {
    Cyclotomic acc(0);
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip();
    bool first = true;
    while (i < text.size()) {
      int sign = 1;
      if (!first) {
        if (text[i] == '+') {
          ++i;
        } else if (text[i] == '-') {
          sign = -1;
          ++i;
        } else {
          throw std::invalid_argument("Cyclotomic parse: expected +/- in " + text);
        }
        skip();
      }
      first = false;
      // optional rational coefficient
      Rat coeff(1);
      bool saw_coeff = false;
      if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '-')) {
        size_t j = i;
        if (text[j] == '-') ++j;
        size_t start = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j < text.size() && text[j] == '/') {
          ++j;
          while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        }
        coeff = Rat(text.substr(start, j - start));
        i = j;
        saw_coeff = true;
        skip();
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip();
        }
      }
      // optional root term
      if (i < text.size() && text[i] == 'z') {
        ++i;
        if (i >= text.size() || text[i] != '(')
          throw std::invalid_argument("Cyclotomic parse: expected z( in " + text);
        ++i;
        unsigned n = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          n = n * 10 + static_cast<unsigned>(text[i++] - '0');
        if (i >= text.size() || text[i] != ')')
          throw std::invalid_argument("Cyclotomic parse: expected ) in " + text);
        ++i;
        long long k = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          bool neg = false;
          if (i < text.size() && text[i] == '-') {
            neg = true;
            ++i;
          }
          k = 0;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            k = k * 10 + (text[i++] - '0');
          if (neg) k = -k;
        }
        acc = acc + Cyclotomic(coeff * sign) * root(n, k);
      } else if (saw_coeff) {
        acc = acc + Cyclotomic(coeff * sign);
      } else {
        throw std::invalid_argument("Cyclotomic parse: malformed term in " + text);
      }
      skip();
    }
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& v) {
    return os << v.to_string();
  }

private:
  bool is_rational_reduced() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  static void trim(std::vector<Rat>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
  }

  static std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
  }

  static std::vector<Rat> sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out = a;
    if (out.size() < b.size()) out.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
  }

  static std::pair<std::vector<Rat>, std::vector<Rat>> divmod(std::vector<Rat> num,
                                                              const std::vector<Rat>& den) {
    std::vector<Rat> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, Rat(0));
    while (num.size() >= den.size() && !(num.size() == 1 && num[0] == 0)) {
      Rat c = num.back() / den.back();
      size_t shift = num.size() - den.size();
      q[shift] = c;
      for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
      trim(num);
      if (num.size() < den.size()) break;
    }
    trim(q);
    return {q, num};
  }

  static std::tuple<std::vector<Rat>, std::vector<Rat>, unsigned> lift_pair(const Cyclotomic& a,
                                                                            const Cyclotomic& b) {
    unsigned n = std::lcm(a.n_, b.n_);
    Cyclotomic x = a.embed(n), y = b.embed(n);
    return {x.c_, y.c_, n};
  }

  // Attempts to rewrite the value in Q(ζ_d) for d | n.
  std::optional<Cyclotomic> try_reduce_to(unsigned d) const {
    unsigned phi_d = cyclo_detail::euler_phi(d);
    unsigned phi_n = static_cast<unsigned>(c_.size());
    // Basis of Q(ζ_d) embedded at conductor n.
    std::vector<std::vector<Rat>> cols;
    unsigned stretch = n_ / d;
    for (unsigned j = 0; j < phi_d; ++j) {
      std::vector<Rat> col(static_cast<size_t>(j) * stretch + 1, Rat(0));
      col[static_cast<size_t>(j) * stretch] = 1;
      cyclo_detail::reduce_mod(col, cyclo_detail::cyclotomic_poly(n_));
      cols.push_back(std::move(col));
    }
    // Solve cols * a = c_ by Gaussian elimination.
    std::vector<std::vector<Rat>> m(phi_n, std::vector<Rat>(phi_d + 1, Rat(0)));
    for (unsigned r = 0; r < phi_n; ++r) {
      for (unsigned j = 0; j < phi_d; ++j) m[r][j] = cols[j][r];
      m[r][phi_d] = c_[r];
    }
    unsigned row = 0;
    std::vector<int> pivot_of_col(phi_d, -1);
    for (unsigned col = 0; col < phi_d && row < phi_n; ++col) {
      unsigned sel = row;
      while (sel < phi_n && m[sel][col] == 0) ++sel;
      if (sel == phi_n) continue;
      std::swap(m[sel], m[row]);
      Rat inv = Rat(1) / m[row][col];
      for (unsigned j = col; j <= phi_d; ++j) m[row][j] *= inv;
      for (unsigned r = 0; r < phi_n; ++r) {
        if (r == row || m[r][col] == 0) continue;
        Rat f = m[r][col];
        for (unsigned j = col; j <= phi_d; ++j) m[r][j] -= f * m[row][j];
      }
      pivot_of_col[col] = static_cast<int>(row);
      ++row;
    }
    // Consistency: all rows below the pivots must vanish.
    for (unsigned r = row; r < phi_n; ++r)
      if (m[r][phi_d] != 0) return std::nullopt;
    Cyclotomic out;
    out.n_ = d;
    out.c_.assign(phi_d, Rat(0));
    for (unsigned col = 0; col < phi_d; ++col)
      if (pivot_of_col[col] >= 0) out.c_[col] = m[static_cast<unsigned>(pivot_of_col[col])][phi_d];
    return out;
  }

  unsigned n_;
  std::vector<Rat> c_;
};

inline Cyclotomic root_of_unity(unsigned n, long long k) { return Cyclotomic::root(n, k); }

}  // namespace nichols
