#pragma once

// Permutations on up to 32 points, stored as image arrays (0-based).
// Composition follows the left-action convention (p*q)(x) = p(q(x)).

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

inline constexpr unsigned kMaxDegree = 32;

class Perm {
public:
  Perm() : n_(0) { img_.fill(0); }

  explicit Perm(unsigned n) : n_(static_cast<uint8_t>(n)) {
    check_degree(n);
    img_.fill(0);
    for (unsigned i = 0; i < n; ++i) img_[i] = static_cast<uint8_t>(i);
  }

  static Perm from_images(const std::vector<unsigned>& images) {
    check_degree(images.size());
    Perm p(static_cast<unsigned>(images.size()));
    std::array<bool, kMaxDegree> seen{};
    for (unsigned i = 0; i < images.size(); ++i) {
      unsigned v = images[i];
      if (v >= images.size() || seen[v])
        throw std::invalid_argument("Perm::from_images: not a bijection");
      seen[v] = true;
      p.img_[i] = static_cast<uint8_t>(v);
    }
    return p;
  }

  unsigned degree() const { return n_; }
  unsigned operator[](unsigned p) const { return img_[p]; }

  bool is_identity() const {
    for (unsigned i = 0; i < n_; ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Perm& a, const Perm& b) {
    if (a.n_ != b.n_) return false;
    for (unsigned i = 0; i < a.n_; ++i)
      if (a.img_[i] != b.img_[i]) return false;
    return true;
  }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (unsigned i = 0; i < a.n_; ++i)
      if (a.img_[i] != b.img_[i]) return a.img_[i] < b.img_[i];
    return false;
  }

  // (p*q)(x) = p(q(x))
  friend Perm operator*(const Perm& p, const Perm& q) {
    if (p.n_ != q.n_) throw std::invalid_argument("Perm: degree mismatch");
    Perm r;
    r.n_ = p.n_;
    for (unsigned i = 0; i < p.n_; ++i) r.img_[i] = p.img_[q.img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.n_ = n_;
    for (unsigned i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
    return r;
  }

  Perm power(long long e) const {
    uint64_t m = order();
    long long r = e % static_cast<long long>(m);
    if (r < 0) r += static_cast<long long>(m);
    Perm acc(n_), base = *this;
    while (r > 0) {
      if (r & 1) acc = base * acc;
      base = base * base;
      r >>= 1;
    }
    return acc;
  }

  uint64_t order() const {
    uint64_t m = 1;
    std::array<bool, kMaxDegree> seen{};
    for (unsigned i = 0; i < n_; ++i) {
      if (seen[i]) continue;
      unsigned len = 0, j = i;
      do {
        seen[j] = true;
        j = img_[j];
        ++len;
      } while (j != i);
      m = std::lcm<uint64_t>(m, len);
    }
    return m;
  }

  // Multiset of cycle lengths, ascending, fixed points included.
  std::vector<unsigned> cycle_type() const {
    std::vector<unsigned> lens;
    std::array<bool, kMaxDegree> seen{};
    for (unsigned i = 0; i < n_; ++i) {
      if (seen[i]) continue;
      unsigned len = 0, j = i;
      do {
        seen[j] = true;
        j = img_[j];
        ++len;
      } while (j != i);
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
  }

  // Disjoint-cycle notation with 1-based points; "()" for the identity.
  std::string cycles() const {
    std::ostringstream os;
    std::array<bool, kMaxDegree> seen{};
    bool any = false;
    for (unsigned i = 0; i < n_; ++i) {
      if (seen[i] || img_[i] == i) {
        seen[i] = true;
        continue;
      }
      os << '(';
      unsigned j = i;
      bool first = true;
      do {
        if (!first) os << ',';
        os << (j + 1);
        first = false;
        seen[j] = true;
        j = img_[j];
      } while (j != i);
      os << ')';
      any = true;
    }
    if (!any) return "()";
    return os.str();
  }

  // Parses "(1,2,3)(4,5)" (1-based, spaces allowed) on a given degree.
  static Perm parse_cycles(const std::string& text, unsigned degree) {
    check_degree(degree);
    Perm p(degree);
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(')
        throw std::invalid_argument("cycle parse: expected '(' in " + text);
      ++i;
      std::vector<unsigned> cyc;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        unsigned v = 0;
        bool got = false;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          v = v * 10 + static_cast<unsigned>(text[i] - '0');
          ++i;
          got = true;
        }
        if (!got) throw std::invalid_argument("cycle parse: expected point in " + text);
        if (v < 1 || v > degree)
          throw std::invalid_argument("cycle parse: point out of range in " + text);
        cyc.push_back(v - 1);
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          skip_ws();
        }
      }
      if (i >= text.size()) throw std::invalid_argument("cycle parse: missing ')' in " + text);
      ++i;  // ')'
      for (size_t k = 0; k + 1 < cyc.size(); ++k) {
        if (p.img_[cyc[k]] != cyc[k])
          throw std::invalid_argument("cycle parse: repeated point in " + text);
        p.img_[cyc[k]] = static_cast<uint8_t>(cyc[k + 1]);
      }
      if (cyc.size() >= 2) {
        if (p.img_[cyc.back()] != cyc.back())
          throw std::invalid_argument("cycle parse: repeated point in " + text);
        p.img_[cyc.back()] = static_cast<uint8_t>(cyc.front());
      }
      skip_ws();
    }
    std::array<bool, kMaxDegree> seen{};
    for (unsigned k = 0; k < degree; ++k) {
      if (seen[p.img_[k]]) throw std::invalid_argument("cycle parse: not a bijection");
      seen[p.img_[k]] = true;
    }
    return p;
  }

  friend std::ostream& operator<<(std::ostream& os, const Perm& p) {
    return os << p.cycles();
  }

private:
  static void check_degree(size_t n) {
    if (n < 1 || n > kMaxDegree)
      throw std::invalid_argument("Perm: degree must be in [1, 32]");
  }

  std::array<uint8_t, kMaxDegree> img_;
  uint8_t n_;
};

// x ▷ y = x y x^{-1}
inline Perm conjugate(const Perm& g, const Perm& x) { return g * x * g.inverse(); }
inline Perm rack_op(const Perm& x, const Perm& y) { return conjugate(x, y); }

// y = g x g^{-1} in one pass.
inline Perm conj_by(const Perm& g, const Perm& x) {
  unsigned n = x.degree();
  std::vector<unsigned> img(n);
  for (unsigned i = 0; i < n; ++i) img[g[i]] = g[x[i]];
  return Perm::from_images(img);
}

inline bool commute(const Perm& a, const Perm& b) { return a * b == b * a; }

// Bit-packed encoding: ceil(log2 n) bits per image, little-endian across
// three 64-bit words. Unique per permutation at a fixed degree.
struct PackedPerm {
  std::array<uint64_t, 3> w{0, 0, 0};

  friend bool operator==(const PackedPerm& a, const PackedPerm& b) { return a.w == b.w; }
  friend bool operator<(const PackedPerm& a, const PackedPerm& b) { return a.w < b.w; }
};

inline unsigned packed_bits(unsigned degree) {
  unsigned b = 1;
  while ((1u << b) < degree) ++b;
  return b;
}

inline PackedPerm pack_perm(const Perm& p) {
  PackedPerm out;
  unsigned b = packed_bits(p.degree());
  unsigned pos = 0;
  for (unsigned i = 0; i < p.degree(); ++i) {
    uint64_t v = p[i];
    unsigned word = pos >> 6, off = pos & 63;
    out.w[word] |= v << off;
    if (off + b > 64) out.w[word + 1] |= v >> (64 - off);
    pos += b;
  }
  return out;
}

inline Perm unpack_perm(const PackedPerm& pp, unsigned degree) {
  unsigned b = packed_bits(degree);
  uint64_t mask = (b == 64) ? ~0ull : ((1ull << b) - 1);
  std::vector<unsigned> img(degree);
  unsigned pos = 0;
  for (unsigned i = 0; i < degree; ++i) {
    unsigned word = pos >> 6, off = pos & 63;
    uint64_t v = pp.w[word] >> off;
    if (off + b > 64) v |= pp.w[word + 1] << (64 - off);
    img[i] = static_cast<unsigned>(v & mask);
    pos += b;
  }
  return Perm::from_images(img);
}

struct PackedPermHash {
  size_t operator()(const PackedPerm& p) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t x : p.w) {
      x ^= h;
      x *= 0xbf58476d1ce4e5b9ull;
      x ^= x >> 27;
      x *= 0x94d049bb133111ebull;
      x ^= x >> 31;
      h = x;
    }
    return static_cast<size_t>(h);
  }
};

struct PermHash {
  size_t operator()(const Perm& p) const { return PackedPermHash{}(pack_perm(p)); }
};

}  // namespace nichols
