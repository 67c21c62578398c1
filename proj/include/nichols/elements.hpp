#pragma once

// Full enumeration of a small permutation group with constant-time element
// lookup and the partition into conjugacy classes. This is the workhorse
// behind centralizer character tables and class-intersection filters.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "nichols/group.hpp"
#include "nichols/perm.hpp"

namespace nichols {

class ElementTable {
public:
  explicit ElementTable(const PermGroup& G, uint64_t budget = 100000) : degree_(G.degree()) {
    if (G.order() > budget)
      throw budget_error("ElementTable: group order " + std::to_string(G.order()) +
                         " exceeds enumeration budget " + std::to_string(budget));
    // BFS closure from the generators.
    push(Perm(degree_));
    for (size_t head = 0; head < elems_.size(); ++head) {
      for (const Perm& g : G.generators()) {
        Perm nb = g * elems_[head];
        if (!idx_.count(pack_perm(nb))) push(nb);
      }
    }
    if (elems_.size() != G.order()) throw std::logic_error("ElementTable: closure mismatch");
    build_classes(G);
  }

  unsigned degree() const { return degree_; }
  size_t size() const { return elems_.size(); }
  const Perm& element(uint32_t i) const { return elems_[i]; }

  static constexpr uint32_t kNotFound = 0xffffffffu;
  uint32_t index_of(const Perm& p) const {
    auto it = idx_.find(pack_perm(p));
    return it == idx_.end() ? kNotFound : it->second;
  }

  size_t class_count() const { return class_rep_.size(); }
  uint32_t class_of(uint32_t elem) const { return class_of_[elem]; }
  uint32_t class_of_element(const Perm& p) const {
    uint32_t i = index_of(p);
    if (i == kNotFound) throw std::invalid_argument("class_of_element: not a member");
    return class_of_[i];
  }
  const Perm& class_rep(uint32_t cls) const { return elems_[class_rep_[cls]]; }
  uint64_t class_size(uint32_t cls) const { return class_size_[cls]; }
  const std::vector<uint32_t>& class_members(uint32_t cls) const { return members_[cls]; }

private:
  void push(const Perm& p) {
    idx_.emplace(pack_perm(p), static_cast<uint32_t>(elems_.size()));
    elems_.push_back(p);
  }

  void build_classes(const PermGroup& G) {
    // Seed classes in canonical (packed) element order so that the class
    // representative is the minimal element of its class and the resulting
    // ordering is independent of generator presentation.
    std::vector<uint32_t> order(elems_.size());
    for (uint32_t i = 0; i < elems_.size(); ++i) order[i] = i;
    std::vector<PackedPerm> keys(elems_.size());
    for (uint32_t i = 0; i < elems_.size(); ++i) keys[i] = pack_perm(elems_[i]);
    std::sort(order.begin(), order.end(),
              [&](uint32_t a, uint32_t b) { return keys[a] < keys[b]; });

    class_of_.assign(elems_.size(), kNotFound);
    for (uint32_t seed : order) {
      if (class_of_[seed] != kNotFound) continue;
      uint32_t cls = static_cast<uint32_t>(class_rep_.size());
      class_rep_.push_back(seed);
      members_.emplace_back();
      std::vector<uint32_t>& mem = members_.back();
      class_of_[seed] = cls;
      mem.push_back(seed);
      for (size_t head = 0; head < mem.size(); ++head) {
        for (const Perm& g : G.generators()) {
          uint32_t nb = index_of(conj_by(g, elems_[mem[head]]));
          if (class_of_[nb] == kNotFound) {
            class_of_[nb] = cls;
            mem.push_back(nb);
          }
        }
      }
      class_size_.push_back(mem.size());
    }

    // Order classes by (element order, class size, representative encoding).
    std::vector<uint32_t> corder(class_rep_.size());
    for (uint32_t i = 0; i < corder.size(); ++i) corder[i] = i;
    std::vector<uint64_t> ords(class_rep_.size());
    for (uint32_t i = 0; i < class_rep_.size(); ++i) ords[i] = elems_[class_rep_[i]].order();
    std::sort(corder.begin(), corder.end(), [&](uint32_t a, uint32_t b) {
      if (ords[a] != ords[b]) return ords[a] < ords[b];
      if (class_size_[a] != class_size_[b]) return class_size_[a] < class_size_[b];
      return keys_less(class_rep_[a], class_rep_[b]);
    });
    std::vector<uint32_t> inv(corder.size());
    for (uint32_t i = 0; i < corder.size(); ++i) inv[corder[i]] = i;
    permute(class_rep_, corder);
    permute(class_size_, corder);
    permute(members_, corder);
    for (auto& c : class_of_) c = inv[c];
  }

  bool keys_less(uint32_t a, uint32_t b) const {
    return pack_perm(elems_[a]) < pack_perm(elems_[b]);
  }

  template <class V>
  static void permute(std::vector<V>& v, const std::vector<uint32_t>& order) {
    std::vector<V> out;
    out.reserve(v.size());
    for (uint32_t i : order) out.push_back(std::move(v[i]));
    v = std::move(out);
  }

  unsigned degree_;
  std::vector<Perm> elems_;
  std::unordered_map<PackedPerm, uint32_t, PackedPermHash> idx_;
  std::vector<uint32_t> class_of_;
  std::vector<uint32_t> class_rep_;
  std::vector<uint64_t> class_size_;
  std::vector<std::vector<uint32_t>> members_;
};

}  // namespace nichols
