#pragma once

// Conjugation orbits with Schreier trees, bit-packed storage and an
// open-addressing index. Enumeration is budgeted: orbits larger than the
// budget are reported as incomplete rather than materialized.

#include <cstdint>
#include <optional>
#include <vector>

#include "nichols/perm.hpp"

namespace nichols {

// Open-addressing set of packed permutations; values are indices into an
// external element vector.
class PackedIndex {
public:
  explicit PackedIndex(size_t expected = 64) { rehash(slots_for(expected)); }

  // Returns index of key, or uint32(-1).
  uint32_t find(const PackedPerm& key, const std::vector<PackedPerm>& elems) const {
    size_t mask = table_.size() - 1;
    size_t h = PackedPermHash{}(key) & mask;
    while (true) {
      uint32_t v = table_[h];
      if (v == kEmpty) return kEmpty;
      if (elems[v] == key) return v;
      h = (h + 1) & mask;
    }
  }

  void insert(const PackedPerm& key, uint32_t value, const std::vector<PackedPerm>& elems) {
    if ((used_ + 1) * 10 >= table_.size() * 7) grow(elems);
    size_t mask = table_.size() - 1;
    size_t h = PackedPermHash{}(key) & mask;
    while (table_[h] != kEmpty) h = (h + 1) & mask;
    table_[h] = value;
    ++used_;
  }

  static constexpr uint32_t kEmpty = 0xffffffffu;

private:
  static size_t slots_for(size_t expected) {
    size_t s = 64;
    while (s * 7 < expected * 10) s <<= 1;
    return s;
  }

  void rehash(size_t n) { table_.assign(n, kEmpty); }

  void grow(const std::vector<PackedPerm>& elems) {
    std::vector<uint32_t> old = std::move(table_);
    rehash(old.size() * 2);
    size_t mask = table_.size() - 1;
    for (uint32_t v : old) {
      if (v == kEmpty) continue;
      size_t h = PackedPermHash{}(elems[v]) & mask;
      while (table_[h] != kEmpty) h = (h + 1) & mask;
      table_[h] = v;
    }
  }

  std::vector<uint32_t> table_;
  size_t used_ = 0;
};

class ConjugationOrbit {
public:
  // BFS closure of `start` under conjugation by `gens`. Returns nullopt when
  // the orbit exceeds `budget` elements.
  static std::optional<ConjugationOrbit> enumerate(const Perm& start,
                                                   const std::vector<Perm>& gens,
                                                   uint64_t budget) {
    ConjugationOrbit o;
    o.degree_ = start.degree();
    o.gens_ = gens;
    o.push(pack_perm(start), 0, 0);
    for (size_t head = 0; head < o.elems_.size(); ++head) {
      Perm cur = unpack_perm(o.elems_[head], o.degree_);
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        PackedPerm nb = pack_perm(conj_by(gens[gi], cur));
        if (o.index_.find(nb, o.elems_) == PackedIndex::kEmpty) {
          if (o.elems_.size() >= budget) return std::nullopt;
          o.push(nb, static_cast<uint32_t>(head), static_cast<uint8_t>(gi));
        }
      }
    }
    return o;
  }

  size_t size() const { return elems_.size(); }
  unsigned degree() const { return degree_; }

  uint32_t index_of(const Perm& p) const {
    return index_.find(pack_perm(p), elems_);
  }
  bool contains(const Perm& p) const { return index_of(p) != PackedIndex::kEmpty; }

  Perm element(size_t i) const { return unpack_perm(elems_[i], degree_); }

  // w with w ▷ start = element(i).
  Perm witness(size_t i) const {
    std::vector<uint8_t> path;
    size_t cur = i;
    while (cur != 0) {
      path.push_back(gen_[cur]);
      cur = parent_[cur];
    }
    Perm w(degree_);
    for (auto it = path.rbegin(); it != path.rend(); ++it) w = gens_[*it] * w;
    return w;
  }

  static constexpr uint32_t kNotFound = PackedIndex::kEmpty;

private:
  void push(const PackedPerm& pp, uint32_t parent, uint8_t gi) {
    uint32_t id = static_cast<uint32_t>(elems_.size());
    elems_.push_back(pp);
    parent_.push_back(parent);
    gen_.push_back(gi);
    index_.insert(pp, id, elems_);
  }

  unsigned degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<PackedPerm> elems_;
  std::vector<uint32_t> parent_;
  std::vector<uint8_t> gen_;
  PackedIndex index_;
};

}  // namespace nichols
