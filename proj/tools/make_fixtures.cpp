// Generates the .ctbl reference tables for the built-in groups and the
// centralizers the acceptance suite cross-checks. Every produced table is
// validated exactly (both orthogonality relations, eigenvalue-multiplicity
// integrality) and, where the group is small enough to recompute, matched
// against the Burnside-Dixon output before being written.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nichols/ctbl.hpp"
#include "nichols/driver.hpp"

using namespace nichols;

namespace {

Cyclotomic I4() { return Cyclotomic::root(4, 1); }

// Sum of z(p)^k over the quadratic residues mod p; equals (-1+i sqrt p)/2
// for p = 3 mod 4 and (-1+sqrt p)/2 for p = 1 mod 4.
Cyclotomic quad_sum(unsigned p) {
  std::vector<bool> qr(p, false);
  for (unsigned k = 1; k < p; ++k) qr[(k * k) % p] = true;
  Cyclotomic s(0);
  for (unsigned k = 1; k < p; ++k)
    if (qr[k]) s = s + Cyclotomic::root(p, k);
  return s;
}

Cyclotomic isqrt2() { return Cyclotomic::root(8, 1) - Cyclotomic::root(8, 7); }
Cyclotomic isqrt3() { return Cyclotomic::root(3, 1) - Cyclotomic::root(3, 2); }
Cyclotomic isqrt5() { return I4() * (Cyclotomic(2) * quad_sum(5) + Cyclotomic(1)); }

// (-1 + i sqrt 15)/2 via the odd quadratic character mod 15.
Cyclotomic c15() {
  auto legendre = [](unsigned k, unsigned p) {
    for (unsigned t = 1; t < p; ++t)
      if ((t * t) % p == k % p) return 1;
    return -1;
  };
  Cyclotomic splus(0);
  for (unsigned k = 1; k < 15; ++k) {
    if (std::gcd(k, 15u) != 1) continue;
    if (legendre(k % 3, 3) * legendre(k % 5, 5) == 1) splus = splus + Cyclotomic::root(15, k);
  }
  // S+ = (1 + i sqrt 15)/2, so the table constant is S+ - 1
  return splus - Cyclotomic(1);
}

using Consts = std::map<char, Cyclotomic>;

Cyclotomic parse_cell(const std::string& cell, const Consts& consts) {
  size_t pos = 0;
  auto term = [&]() -> Cyclotomic {
    int sign = 1;
    if (pos < cell.size() && (cell[pos] == '-' || cell[pos] == '+')) {
      if (cell[pos] == '-') sign = -1;
      ++pos;
    }
    long long num = 0;
    bool have_num = false;
    while (pos < cell.size() && std::isdigit(static_cast<unsigned char>(cell[pos]))) {
      num = num * 10 + (cell[pos++] - '0');
      have_num = true;
    }
    Cyclotomic coef(Rat(sign * (have_num ? num : 1)));
    if (pos < cell.size() && std::isalpha(static_cast<unsigned char>(cell[pos]))) {
      char c = cell[pos++];
      Cyclotomic base = (c == 'i') ? I4() : consts.at(c);
      if (pos < cell.size() && cell[pos] == '\'') {
        base = base.conj();
        ++pos;
      }
      return coef * base;
    }
    if (!have_num) throw std::runtime_error("cell parse: bare sign in " + cell);
    return coef;
  };
  Cyclotomic v = term();
  while (pos < cell.size()) v = v + term();
  return v;
}

struct PaperData {
  std::vector<uint64_t> orders;
  std::vector<uint64_t> cents;  // centralizer orders inside the table's group; may be empty
  std::vector<std::vector<Cyclotomic>> rows;
};

PaperData parse_paper(const std::string& text, const Consts& consts) {
  PaperData out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "orders:") {
      uint64_t v;
      while (ls >> v) out.orders.push_back(v);
    } else if (tag == "cents:") {
      uint64_t v;
      while (ls >> v) out.cents.push_back(v);
    } else if (tag == "row:") {
      std::vector<Cyclotomic> row;
      std::string cell;
      while (ls >> cell)
        if (cell != "|") row.push_back(parse_cell(cell, consts));
      if (row.size() != out.orders.size())
        throw std::runtime_error("row length mismatch: got " + std::to_string(row.size()));
      out.rows.push_back(std::move(row));
    } else {
      throw std::runtime_error("unknown paper tag " + tag);
    }
  }
  if (out.rows.size() != out.orders.size())
    throw std::runtime_error("table not square: " + std::to_string(out.rows.size()) + " rows vs " +
                             std::to_string(out.orders.size()) + " columns");
  return out;
}

// Eigenvalue-multiplicity integrality from power maps alone: for every class
// and every row, (1/o) sum_k chi(c^k) z^{-jk} must be a nonnegative integer.
void check_integrality(const CharacterTable& t) {
  for (uint32_t c = 0; c < t.class_count(); ++c) {
    unsigned o = static_cast<unsigned>(t.classes[c].order);
    std::vector<uint32_t> pow(o);
    for (unsigned k = 0; k < o; ++k) pow[k] = t.power_class(c, k);
    for (size_t i = 0; i < t.irrep_count(); ++i) {
      uint64_t total = 0;
      for (unsigned j = 0; j < o; ++j) {
        Cyclotomic m(0);
        for (unsigned k = 0; k < o; ++k)
          m = m + t.rows[i][pow[k]] * Cyclotomic::root(o, -static_cast<long long>(j) * k);
        m = m * Cyclotomic(Rat(1, o));
        Rat v = m.rational_value();
        if (denominator(v) != 1 || v < 0)
          throw std::runtime_error("integrality failure at row " + std::to_string(i + 1) +
                                   " class " + std::to_string(c + 1));
        total += numerator(v).convert_to<uint64_t>();
      }
      if (total != t.degree(i)) throw std::runtime_error("integrality: wrong total");
    }
  }
}

// Assigns paper columns to computed classes so that the value grids agree up
// to a row bijection; returns the column map (paper -> computed class).
std::vector<size_t> match_columns(const PaperData& paper, const CharacterTable& comp,
                                  uint64_t cent_order) {
  size_t r = paper.orders.size();
  if (comp.class_count() != r) throw std::runtime_error("match: class count");
  std::vector<std::vector<size_t>> cands(r);
  for (size_t c = 0; c < r; ++c) {
    for (size_t d = 0; d < r; ++d) {
      if (comp.classes[d].order != paper.orders[c]) continue;
      if (!paper.cents.empty() && comp.classes[d].size != cent_order / paper.cents[c]) continue;
      cands[c].push_back(d);
    }
    if (cands[c].empty()) throw std::runtime_error("match: no candidate column");
  }
  std::vector<size_t> order(r);
  for (size_t i = 0; i < r; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return cands[a].size() < cands[b].size(); });
  std::vector<size_t> map(r, SIZE_MAX);
  std::vector<bool> used(r, false);

  auto rows_agree = [&]() {
    std::vector<std::string> ka, kb;
    for (const auto& row : paper.rows) {
      std::vector<std::string> cells(r);
      for (size_t c = 0; c < r; ++c) cells[map[c]] = row[c].to_string();
      std::string s;
      for (auto& x : cells) s += x + "|";
      ka.push_back(std::move(s));
    }
    for (const auto& row : comp.rows) {
      std::string s;
      for (const auto& v : row) s += v.to_string() + "|";
      kb.push_back(std::move(s));
    }
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
  };

  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == r) return rows_agree();
    size_t c = order[i];
    for (size_t d : cands[c]) {
      if (used[d]) continue;
      map[c] = d;
      used[d] = true;
      if (rec(i + 1)) return true;
      used[d] = false;
      map[c] = SIZE_MAX;
    }
    return false;
  };
  if (!rec(0)) throw std::runtime_error("match: paper data does not match the computed table");
  return map;
}

CharacterTable assemble(const PaperData& paper, const CharacterTable& comp,
                        const std::vector<size_t>& colmap, const std::string& digest) {
  size_t r = paper.orders.size();
  CharacterTable t;
  t.group_order = comp.group_order;
  t.group_degree = comp.group_degree;
  t.group_digest = digest;
  t.classes.resize(r);
  std::vector<size_t> inv(r);  // computed class -> paper column
  for (size_t c = 0; c < r; ++c) inv[colmap[c]] = c;
  for (size_t c = 0; c < r; ++c) {
    t.classes[c].order = paper.orders[c];
    t.classes[c].size = comp.classes[colmap[c]].size;
    t.classes[c].rep = comp.classes[colmap[c]].rep;
  }
  for (const auto& [p, pm] : comp.power_maps) {
    std::vector<uint32_t> npm(r);
    for (size_t c = 0; c < r; ++c) npm[c] = static_cast<uint32_t>(inv[pm[colmap[c]]]);
    t.power_maps[p] = std::move(npm);
  }
  t.rows = paper.rows;
  t.validate();
  check_integrality(t);
  return t;
}

// ---- centralizer tables -----------------------------------------------------

struct CentSpec {
  const char* file;
  const char* group;
  const char* rep;  // class representative whose centralizer is tabulated
  Consts consts;
  const char* data;
};

// ---- whole-group tables -----------------------------------------------------

struct GroupSpec {
  const char* file;
  const char* group;
  Consts consts;
  const char* data;
  // 1-based column -> explicit representative (leading '!' inverts)
  std::map<size_t, const char*> hints;
};

void write_table(const std::string& dir, const std::string& file, const CharacterTable& t) {
  std::string path = dir + "/" + file;
  std::ofstream os(path);
  os << emit_ctbl(t);
  std::printf("wrote %s (%zu classes)\n", path.c_str(), t.class_count());
}

void make_cent_table(const std::string& dir, const CentSpec& spec) {
  PermGroup G = mathieu(spec.group);
  Perm s = Perm::parse_cycles(spec.rep, G.degree());
  PermGroup cent = centralizer(G, s);
  CharacterTable comp = burnside_dixon(cent);
  PaperData paper = parse_paper(spec.data, spec.consts);
  auto colmap = match_columns(paper, comp, cent.order());
  GroupDef def{G.degree(), cent.generators()};
  CharacterTable t = assemble(paper, comp, colmap, digest_hex(def));
  if (!tables_match(t, comp)) throw std::runtime_error("assembled table does not match");
  write_table(dir, spec.file, t);
}

void make_group_table(const std::string& dir, const GroupSpec& spec) {
  PermGroup G = mathieu(spec.group);
  auto classes = conjugacy_classes(G);
  PaperData paper = parse_paper(spec.data, spec.consts);
  size_t r = paper.orders.size();
  if (classes.size() != r) throw std::runtime_error("census class count mismatch");

  ConjBudgets budgets;
  // column -> census class
  std::vector<size_t> colmap(r, SIZE_MAX);
  std::vector<bool> used(r, false);
  for (size_t c = 0; c < r; ++c) {
    auto it = spec.hints.find(c + 1);
    if (it == spec.hints.end()) continue;
    std::string h = it->second;
    bool invert = !h.empty() && h[0] == '!';
    Perm rep = Perm::parse_cycles(invert ? h.substr(1) : h, G.degree());
    if (invert) rep = rep.inverse();
    if (!G.contains(rep)) throw std::runtime_error("hint not in group");
    bool found = false;
    for (size_t d = 0; d < r && !found; ++d)
      if (!used[d] && detail::conjugate_to(G, classes[d], rep, budgets)) {
        colmap[c] = d;
        used[d] = true;
        found = true;
      }
    if (!found) throw std::runtime_error("hint matched no class");
  }
  for (size_t c = 0; c < r; ++c) {
    if (colmap[c] != SIZE_MAX) continue;
    std::vector<size_t> cand;
    for (size_t d = 0; d < r; ++d) {
      if (used[d]) continue;
      if (classes[d].rep.order() != paper.orders[c]) continue;
      if (classes[d].centralizer.order() != paper.cents[c]) continue;
      cand.push_back(d);
    }
    if (cand.empty()) throw std::runtime_error("no census class for a column");
    colmap[c] = cand.front();  // deterministic: ascending label
    used[cand.front()] = true;
  }

  CharacterTable t;
  t.group_order = G.order();
  t.group_degree = G.degree();
  GroupDef def = builtin_group_def(spec.group);
  t.group_digest = digest_hex(def);
  t.classes.resize(r);
  for (size_t c = 0; c < r; ++c) {
    t.classes[c].order = paper.orders[c];
    t.classes[c].size = classes[colmap[c]].size;
    t.classes[c].rep = classes[colmap[c]].rep;
  }
  // power maps from the census representatives
  uint64_t max_order = 1;
  for (const auto& ci : t.classes) max_order = std::max(max_order, ci.order);
  for (unsigned p = 2; p <= max_order; ++p) {
    if (!fp::is_prime(p)) continue;
    std::vector<uint32_t> pm(r);
    for (size_t c = 0; c < r; ++c) {
      Perm pw = classes[colmap[c]].rep.power(p);
      uint32_t target = UINT32_MAX;
      for (size_t d = 0; d < r && target == UINT32_MAX; ++d)
        if (classes[colmap[d]].rep.order() == pw.order() &&
            detail::conjugate_to(G, classes[colmap[d]], pw, budgets))
          target = static_cast<uint32_t>(d);
      if (target == UINT32_MAX) throw std::runtime_error("power map unresolved");
      pm[c] = target;
    }
    t.power_maps[p] = std::move(pm);
  }
  t.rows = paper.rows;
  t.validate();
  check_integrality(t);

  // cross-check against a fully computed table when the group is enumerable
  if (G.order() <= 100000) {
    CharacterTable comp = burnside_dixon(G);
    if (!tables_match(t, comp)) throw std::runtime_error("table does not match Dixon output");
  }
  write_table(dir, spec.file, t);
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);

  const Cyclotomic A11 = quad_sum(11).conj();  // (-1 - i sqrt 11)/2
  const Cyclotomic A7 = quad_sum(7);           // (-1 + i sqrt 7)/2
  const Cyclotomic C7 = quad_sum(7).conj();    // (-1 - i sqrt 7)/2
  const Cyclotomic B11 = quad_sum(11);         // (-1 + i sqrt 11)/2
  const Cyclotomic D23 = quad_sum(23);         // (-1 + i sqrt 23)/2
  const Cyclotomic C15 = c15();                // (-1 + i sqrt 15)/2

  std::vector<GroupSpec> groups;
  std::vector<CentSpec> cents;

  groups.push_back(GroupSpec{
      "m11.ctbl", "m11", Consts{{'A', A11}, {'B', isqrt2()}},
      R"(orders: 1 11 11 4 2 8 8 3 5 6
cents: 7920 11 11 8 48 8 8 18 5 6
row: 1 1 1 1 1 1 1 1 1 1
row: 10 -1 -1 2 2 0 0 1 0 -1
row: 10 -1 -1 0 -2 B B' 1 0 1
row: 10 -1 -1 0 -2 B' B 1 0 1
row: 11 0 0 -1 3 -1 -1 2 1 0
row: 16 A A' 0 0 0 0 -2 1 0
row: 16 A' A 0 0 0 0 -2 1 0
row: 44 0 0 0 4 0 0 -1 -1 1
row: 45 1 1 1 -3 -1 -1 0 0 0
row: 55 0 0 -1 -1 1 1 1 0 -1
)",
      {{1, "()"},
       {2, "(1,9,7,10,8,11,5,4,3,6,2)"},
       {3, "(1,7,8,5,3,2,9,10,11,4,6)"},
       {4, "(1,8,2,7)(4,6,10,5)"},
       {5, "(1,2)(4,10)(5,6)(7,8)"},
       {6, "(1,3,11,6,7,10,4,5)(8,9)"},
       {7, "(1,10,11,5,7,3,4,6)(8,9)"},
       {8, "(1,6,4)(2,9,7)(8,11,10)"},
       {9, "(1,2,3,4,8)(5,10,7,11,6)"},
       {10, "(1,5,8,4,6,9)(2,10,3)(7,11)"}}});

  groups.push_back(GroupSpec{
      "m12.ctbl", "m12", Consts{{'A', A11}},
      R"(orders: 1 6 3 2 8 4 6 3 2 5 11 11 10 8 4
cents: 95040 6 54 192 8 32 12 36 240 10 11 11 10 8 32
row: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
row: 11 0 2 3 1 3 -1 -1 -1 1 0 0 -1 -1 -1
row: 11 0 2 3 -1 -1 -1 -1 -1 1 0 0 -1 1 3
row: 16 0 -2 0 0 0 1 1 4 1 A' A -1 0 0
row: 16 0 -2 0 0 0 1 1 4 1 A A' -1 0 0
row: 45 0 0 -3 -1 1 -1 3 5 0 1 1 0 -1 1
row: 54 0 0 6 0 2 0 0 6 -1 -1 -1 1 0 2
row: 55 1 1 7 -1 -1 1 1 -5 0 0 0 0 -1 -1
row: 55 -1 1 -1 -1 3 1 1 -5 0 0 0 0 1 -1
row: 55 -1 1 -1 1 -1 1 1 -5 0 0 0 0 -1 3
row: 66 -1 3 2 0 -2 0 0 6 1 0 0 1 0 -2
row: 99 0 0 3 1 -1 -1 3 -1 -1 0 0 -1 1 -1
row: 120 1 3 -8 0 0 0 0 0 0 -1 -1 0 0 0
row: 144 0 0 0 0 0 1 -3 4 -1 1 1 -1 0 0
row: 176 0 -4 0 0 0 -1 -1 -4 1 0 0 1 0 0
)",
      {{1, "()"},
       {2, "(1,8,12)(2,3,11,9,10,6)(4,5)"},
       {3, "(1,12,8)(2,11,10)(3,9,6)"},
       {4, "(2,9)(3,10)(4,5)(6,11)"},
       {5, "(1,12,7,4)(2,9,10,5,11,3,6,8)"},
       {6, "(1,7)(2,10,11,6)(3,8,9,5)(4,12)"},
       {7, "(1,9,4,2,11,8)(3,10,12,5,6,7)"},
       {8, "(1,4,11)(2,8,9)(3,12,6)(5,7,10)"},
       {9, "(1,2)(3,5)(4,8)(6,10)(7,12)(9,11)"},
       {10, "(1,7,2,6,5)(3,9,12,10,11)"},
       {11, "(2,10,6,4,12,5,7,3,8,11,9)"},
       {12, "(2,6,12,7,8,9,10,4,5,3,11)"},
       {13, "(1,2,7,10,5,6,8,12,9,4)(3,11)"},
       {14, "(1,10,11,8,4,5,12,3)(6,9)"},
       {15, "(1,11,4,12)(3,10,8,5)"}}});

  groups.push_back(GroupSpec{
      "m22.ctbl", "m22", Consts{{'A', A11}, {'C', C7}},
      R"(orders: 1 4 2 8 7 7 5 11 11 4 6 3
cents: 443520 32 384 8 7 7 5 11 11 16 12 36
row: 1 1 1 1 1 1 1 1 1 1 1 1
row: 21 1 5 -1 0 0 1 -1 -1 1 -1 3
row: 45 1 -3 -1 C C' 0 1 1 1 0 0
row: 45 1 -3 -1 C' C 0 1 1 1 0 0
row: 55 3 7 1 -1 -1 0 0 0 -1 1 1
row: 99 3 3 -1 1 1 -1 0 0 -1 0 0
row: 154 -2 10 0 0 0 -1 0 0 2 1 1
row: 210 -2 2 0 0 0 0 1 1 -2 -1 3
row: 231 -1 7 -1 0 0 1 0 0 -1 1 -3
row: 280 0 -8 0 0 0 0 A' A 0 1 1
row: 280 0 -8 0 0 0 0 A A' 0 1 1
row: 385 1 1 1 0 0 0 0 0 1 -2 -2
)",
      {{1, "()"},
       {2, "(1,10,13,17)(2,3,14,15)(4,20,18,7)(5,21)(6,22)(9,11,12,16)"},
       {3, "(1,13)(2,14)(3,15)(4,18)(7,20)(9,12)(10,17)(11,16)"},
       {4, "(1,8,17,5,11,15,3,7)(2,14,9,16)(4,20)(6,21,13,22,19,18,12,10)"},
       {5, "(1,12,16,15,19,11,18)(2,7,9,14,13,10,6)(3,22,4,17,5,21,8)"},
       {6, "(1,15,18,16,11,12,19)(2,14,6,9,10,7,13)(3,17,8,4,21,22,5)"},
       {7, "(1,4,2,6,3)(5,15,12,22,18)(7,8,11,19,20)(9,17,10,14,21)"},
       {8, "(1,18,4,12,15,8,3,17,19,7,6)(2,9,16,11,13,22,20,5,10,14,21)"},
       {9, "(1,4,15,3,19,6,18,12,8,17,7)(2,16,13,20,10,21,9,11,22,5,14)"},
       {10, "(1,6,5,17)(3,8)(4,11)(7,13,16,14)(9,12,22,15)(10,20,18,19)"},
       {11, "(1,7,22)(2,13,6,14,5,3)(4,10)(8,16,9,20,19,17)(11,15,21)(12,18)"},
       {12, "(1,22,7)(2,6,5)(3,13,14)(8,9,19)(11,21,15)(16,20,17)"}}});

  groups.push_back(GroupSpec{
      "m23.ctbl", "m23",
      Consts{{'A', A7}, {'B', B11}, {'C', C15}, {'D', D23}},
      R"(orders: 1 2 3 4 5 6 7 7 8 11 11 14 14 15 15 23 23
cents: 10200960 2688 180 32 15 12 14 14 8 11 11 14 14 15 15 23 23
row: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
row: 22 6 4 2 2 0 1 1 0 0 0 -1 -1 -1 -1 -1 -1
row: 45 -3 0 1 0 0 A A' -1 1 1 -A -A' 0 0 -1 -1
row: 45 -3 0 1 0 0 A' A -1 1 1 -A' -A 0 0 -1 -1
row: 230 22 5 2 0 1 -1 -1 0 -1 -1 1 1 0 0 0 0
row: 231 7 6 -1 1 -2 0 0 -1 0 0 0 0 1 1 1 1
row: 231 7 -3 -1 1 1 0 0 -1 0 0 0 0 C C' 1 1
row: 231 7 -3 -1 1 1 0 0 -1 0 0 0 0 C' C 1 1
row: 253 13 1 1 -2 1 1 1 -1 0 0 -1 -1 1 1 0 0
row: 770 -14 5 -2 0 1 0 0 0 0 0 0 0 0 0 D D'
row: 770 -14 5 -2 0 1 0 0 0 0 0 0 0 0 0 D' D
row: 896 0 -4 0 1 0 0 0 0 B B' 0 0 1 1 -1 -1
row: 896 0 -4 0 1 0 0 0 0 B' B 0 0 1 1 -1 -1
row: 990 -18 0 2 0 0 A A' 0 0 0 A A' 0 0 1 1
row: 990 -18 0 2 0 0 A' A 0 0 0 A' A 0 0 1 1
row: 1035 27 0 -1 0 0 -1 -1 1 1 1 -1 -1 0 0 0 0
row: 2024 8 -1 0 -1 -1 1 1 0 0 0 1 1 -1 -1 0 0
)",
      {{2, "(1,10)(3,14)(4,17)(5,13)(6,11)(12,21)(16,22)(20,23)"},
       {4, "(1,17,10,4)(2,8)(3,6,14,11)(5,12,13,21)(7,15)(16,20,22,23)"},
       {6, "(1,19,20)(2,9,18,17,14,5)(3,21)(4,13,23,10,11,22)(6,8,15)(7,16)"},
       {9, "(1,3,5,20,10,14,13,23)(2,15,7,8)(4,22,12,6,17,16,21,11)(9,19)"}}});

  groups.push_back(GroupSpec{
      "m24.ctbl", "m24", Consts{{'A', A7}, {'C', C15}, {'D', D23}},
      R"(orders: 1 2 2 3 3 4 4 4 5 6 6 7 7 8 10 11 12 12 14 14 15 15 21 21 23 23
cents: 244823040 21504 7680 1080 504 384 128 96 60 24 24 42 42 16 20 11 12 12 14 14 15 15 21 21 23 23
row: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
row: 23 7 -1 5 -1 -1 3 -1 3 1 -1 2 2 1 -1 1 -1 -1 0 0 0 0 -1 -1 0 0
row: 45 -3 5 0 3 -3 1 1 0 0 -1 A A' -1 0 1 0 1 -A -A' 0 0 A A' -1 -1
row: 45 -3 5 0 3 -3 1 1 0 0 -1 A' A -1 0 1 0 1 -A' -A 0 0 A' A -1 -1
row: 231 7 -9 -3 0 -1 -1 3 1 1 0 0 0 -1 1 0 -1 0 0 0 C C' 0 0 1 1
row: 231 7 -9 -3 0 -1 -1 3 1 1 0 0 0 -1 1 0 -1 0 0 0 C' C 0 0 1 1
row: 252 28 12 9 0 4 4 0 2 1 0 0 0 0 2 -1 1 0 0 0 -1 -1 0 0 -1 -1
row: 253 13 -11 10 1 -3 1 1 3 -2 1 1 1 -1 -1 0 0 1 -1 -1 0 0 1 1 0 0
row: 483 35 3 6 0 3 3 3 -2 2 0 0 0 -1 -2 -1 0 0 0 0 1 1 0 0 0 0
row: 770 -14 10 5 -7 2 -2 -2 0 1 1 0 0 0 0 0 -1 1 0 0 0 0 0 0 D D'
row: 770 -14 10 5 -7 2 -2 -2 0 1 1 0 0 0 0 0 -1 1 0 0 0 0 0 0 D' D
row: 990 -18 -10 0 3 6 2 -2 0 0 -1 A A' 0 0 0 0 1 A A' 0 0 A A' 1 1
row: 990 -18 -10 0 3 6 2 -2 0 0 -1 A' A 0 0 0 0 1 A' A 0 0 A' A 1 1
row: 1035 27 35 0 6 3 -1 3 0 0 2 -1 -1 1 0 1 0 0 -1 -1 0 0 -1 -1 0 0
row: 1035 -21 -5 0 -3 3 3 -1 0 0 1 2A 2A' -1 0 1 0 -1 0 0 0 0 -A -A' 0 0
row: 1035 -21 -5 0 -3 3 3 -1 0 0 1 2A' 2A -1 0 1 0 -1 0 0 0 0 -A' -A 0 0
row: 1265 49 -15 5 8 -7 1 -3 0 1 0 -2 -2 1 0 0 -1 0 0 0 0 0 1 1 0 0
row: 1771 -21 11 16 7 3 -5 -1 1 0 -1 0 0 -1 1 0 0 -1 0 0 1 1 0 0 0 0
row: 2024 8 24 -1 8 8 0 0 -1 -1 0 1 1 0 -1 0 -1 0 1 1 -1 -1 1 1 0 0
row: 2277 21 -19 0 6 -3 1 -3 -3 0 2 2 2 -1 1 0 0 0 0 0 0 0 -1 -1 0 0
row: 3312 48 16 0 -6 0 0 0 -3 0 -2 1 1 0 1 1 0 0 -1 -1 0 0 1 1 0 0
row: 3520 64 0 10 -8 0 0 0 0 -2 0 -1 -1 0 0 0 0 0 1 1 0 0 -1 -1 1 1
row: 5313 49 9 -15 0 1 -3 -3 3 1 0 0 0 -1 -1 0 1 0 0 0 0 0 0 0 0 0
row: 5544 -56 24 9 0 -8 0 0 -1 1 0 0 0 0 -1 0 1 0 0 0 -1 -1 0 0 1 1
row: 5796 -28 36 -9 0 -4 4 0 1 -1 0 0 0 0 1 -1 -1 0 0 0 1 1 0 0 0 0
row: 10395 -21 -45 0 0 3 -1 3 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 -1 -1
)",
      {{2, "(1,20)(5,19)(7,24)(9,17)(11,18)(12,13)(14,23)(15,21)"},
       {3, "(1,11)(2,23)(3,7)(4,13)(5,6)(8,18)(9,16)(10,15)(12,24)(14,17)(19,21)(20,22)"},
       {6, "(1,9,20,17)(2,6)(3,10)(4,8)(5,24,19,7)(11,14,18,23)(12,21,13,15)(16,22)"},
       {7, "(1,18,11,16)(3,6,8,20)(7,22,14,19)(9,15)(10,23,12,21)(17,24)"},
       {8, "(1,22,11,16)(2,8,14,17)(3,23,24,6)(4,21,12,13)(5,15,19,9)(7,18,20,10)"},
       {10, "(1,20)(3,4,16)(5,14,21,19,23,15)(7,11,12,24,18,13)(8,22,10)(9,17)"},
       {14, "(1,22,18,14,11,19,16,7)(2,13)(3,12,6,21,8,10,20,23)(9,17,15,24)"},
       {15, "(1,11)(2,3,14,13,9,23,7,17,4,16)(5,19,10,20,18,6,21,15,22,8)(12,24)"},
       {17, "(1,9,12,10,17,14,3,23,5,21,19,13)(2,18)(4,8,15,20)(6,16,7,24,22,11)"},
       {18, "(1,18,20,4,17,5,24,13,11,14,7,23)(2,10,16,21,22,8,15,19,12,6,9,3)"},
       {19, "(1,5,20,23,19,2,18,7,17,9,21,24,6,12)(3,14,8,15,13,11,16)(4,22)"},
       {20, "!(1,5,20,23,19,2,18,7,17,9,21,24,6,12)(3,14,8,15,13,11,16)(4,22)"}}});

  cents.push_back(CentSpec{
      "m11s5.ctbl", "m11", "(1,2)(4,10)(5,6)(7,8)", Consts{{'B', isqrt2()}},
      R"(orders: 1 2 3 2 6 4 8 8
cents: 48 4 6 48 6 8 8 8
row: 1 1 1 1 1 1 1 1
row: 1 -1 1 1 1 1 -1 -1
row: 2 0 -1 2 -1 2 0 0
row: 2 0 -1 -2 1 0 B -B
row: 2 0 -1 -2 1 0 -B B
row: 3 -1 0 3 0 -1 1 1
row: 3 1 0 3 0 -1 -1 -1
row: 4 0 1 -4 -1 0 0 0
)"});

  cents.push_back(CentSpec{
      "m12s6.ctbl", "m12", "(1,7)(2,10,11,6)(3,8,9,5)(4,12)", Consts{},
      R"(orders: 1 4 4 2 4 8 4 2 2 4 4 4 8 4
cents: 32 8 16 32 16 8 16 16 8 32 32 16 8 16
row: 1 1 1 1 1 1 1 1 1 1 1 1 1 1
row: 1 -1 1 1 -1 1 -1 1 -1 1 1 -1 1 -1
row: 1 1 1 1 -1 -1 -1 1 1 1 1 -1 -1 -1
row: 1 -1 1 1 1 -1 1 1 -1 1 1 1 -1 1
row: 1 1 1 1 -i -i -i -1 -1 -1 -1 i i i
row: 1 -1 1 1 -i i -i -1 1 -1 -1 i -i i
row: 1 1 1 1 i i i -1 -1 -1 -1 -i -i -i
row: 1 -1 1 1 i -i i -1 1 -1 -1 -i i -i
row: 2 0 -2 2 0 0 0 -2 0 2 2 0 0 0
row: 2 0 -2 2 0 0 0 2 0 -2 -2 0 0 0
row: 2 0 0 -2 1+i 0 -1-i 0 0 -2i 2i 1-i 0 -1+i
row: 2 0 0 -2 -1-i 0 1+i 0 0 -2i 2i -1+i 0 1-i
row: 2 0 0 -2 -1+i 0 1-i 0 0 2i -2i -1-i 0 1+i
row: 2 0 0 -2 1-i 0 -1+i 0 0 2i -2i 1+i 0 -1-i
)"});

  cents.push_back(CentSpec{
      "m12s4.ctbl", "m12", "(2,9)(3,10)(4,5)(6,11)", Consts{},
      R"(orders: 1 2 3 8 6 4 2 2 4 8 4 2 4
cents: 192 8 6 8 6 32 192 32 16 8 32 16 16
row: 1 1 1 1 1 1 1 1 1 1 1 1 1
row: 1 -1 1 -1 1 1 1 1 -1 -1 1 1 -1
row: 2 0 -1 0 -1 2 2 2 0 0 2 2 0
row: 3 -1 0 1 0 -1 3 -1 1 -1 3 -1 1
row: 3 1 0 -1 0 -1 3 -1 -1 1 3 -1 -1
row: 3 -1 0 -1 0 3 3 -1 1 1 -1 -1 1
row: 3 1 0 -1 0 -1 3 3 1 -1 -1 -1 1
row: 3 1 0 1 0 3 3 -1 -1 -1 -1 -1 -1
row: 3 -1 0 1 0 -1 3 3 -1 1 -1 -1 -1
row: 4 0 1 0 -1 0 -4 0 2 0 0 0 -2
row: 4 0 1 0 -1 0 -4 0 -2 0 0 0 2
row: 6 0 0 0 0 -2 6 -2 0 0 -2 2 0
row: 8 0 -1 0 1 0 -8 0 0 0 0 0 0
)"});

  cents.push_back(CentSpec{
      "m12s9.ctbl", "m12", "(1,2)(3,5)(4,8)(6,10)(7,12)(9,11)", Consts{},
      R"(orders: 1 2 4 5 2 4 10 2 2 6 6 3 6 2
cents: 240 16 8 10 16 8 10 240 24 12 12 12 12 24
row: 1 1 1 1 1 1 1 1 1 1 1 1 1 1
row: 1 1 -1 1 -1 1 -1 -1 1 -1 1 1 -1 -1
row: 1 1 1 1 -1 -1 -1 -1 -1 -1 -1 1 1 1
row: 1 1 -1 1 1 -1 1 1 -1 1 -1 1 -1 -1
row: 4 0 0 -1 0 0 -1 4 -2 1 1 1 1 -2
row: 4 0 0 -1 0 0 1 -4 2 -1 -1 1 1 -2
row: 4 0 0 -1 0 0 -1 4 2 1 -1 1 -1 2
row: 4 0 0 -1 0 0 1 -4 -2 -1 1 1 -1 2
row: 5 1 -1 0 1 -1 0 5 1 -1 1 -1 1 1
row: 5 1 -1 0 -1 1 0 -5 -1 1 -1 -1 1 1
row: 5 1 1 0 1 1 0 5 -1 -1 -1 -1 -1 -1
row: 5 1 1 0 -1 -1 0 -5 1 1 1 -1 -1 -1
row: 6 -2 0 1 -2 0 1 6 0 0 0 0 0 0
row: 6 -2 0 1 2 0 -1 -6 0 0 0 0 0 0
)"});

  cents.push_back(CentSpec{
      "m22s3.ctbl", "m22",
      "(1,13)(2,14)(3,15)(4,18)(7,20)(9,12)(10,17)(11,16)", Consts{{'d', isqrt3()}},
      R"(orders: 1 2 2 3 4 2 6 4 4 4 8 6 4 4 6 2 2
cents: 384 16 32 12 8 64 12 16 32 16 8 12 16 16 12 48 384
row: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
row: 1 -1 1 1 -1 1 1 -1 1 -1 1 -1 1 1 -1 -1 1
row: 1 1 1 1 1 1 1 1 1 -1 -1 -1 -1 -1 -1 -1 1
row: 1 -1 1 1 -1 1 1 -1 1 1 -1 1 -1 -1 1 1 1
row: 2 0 2 -1 0 2 -1 0 2 -2 0 1 0 0 1 -2 2
row: 2 0 2 -1 0 2 -1 0 2 2 0 -1 0 0 -1 2 2
row: 3 -1 -1 0 1 3 0 -1 -1 1 -1 0 1 1 0 -3 3
row: 3 1 -1 0 -1 3 0 1 -1 1 1 0 -1 -1 0 -3 3
row: 3 -1 -1 0 1 3 0 -1 -1 -1 1 0 -1 -1 0 3 3
row: 3 1 -1 0 -1 3 0 1 -1 -1 -1 0 1 1 0 3 3
row: 6 0 -2 0 0 -2 0 0 2 0 0 0 2 -2 0 0 6
row: 6 0 -2 0 0 -2 0 0 2 0 0 0 -2 2 0 0 6
row: 6 -2 2 0 0 -2 0 2 -2 0 0 0 0 0 0 0 6
row: 6 2 2 0 0 -2 0 -2 -2 0 0 0 0 0 0 0 6
row: 8 0 0 2 0 0 -2 0 0 0 0 0 0 0 0 0 -8
row: 8 0 0 -1 0 0 1 0 0 0 0 d 0 0 -d 0 -8
row: 8 0 0 -1 0 0 1 0 0 0 0 -d 0 0 d 0 -8
)"});

  cents.push_back(CentSpec{
      "m23s2.ctbl", "m23",
      "(1,10)(3,14)(4,17)(5,13)(6,11)(12,21)(16,22)(20,23)",
      Consts{{'A', A7}, {'B', isqrt3()}},
      R"(orders: 1 7 7 14 14 3 6 6 6 2 4 8 2 4 2 4
cents: 2688 14 14 14 14 12 12 12 12 2688 32 8 192 16 32 8
row: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
row: 3 A A' A A' 0 0 0 0 3 -1 1 3 -1 -1 1
row: 3 A' A A' A 0 0 0 0 3 -1 1 3 -1 -1 1
row: 6 -1 -1 -1 -1 0 0 0 0 6 2 0 6 2 2 0
row: 7 0 0 0 0 1 1 -1 -1 7 3 1 -1 -1 -1 -1
row: 7 0 0 0 0 1 1 1 1 7 -1 -1 7 -1 -1 -1
row: 7 0 0 0 0 1 1 -1 -1 7 -1 -1 -1 -1 3 1
row: 8 1 1 1 1 -1 -1 -1 -1 8 0 0 8 0 0 0
row: 8 1 1 -1 -1 2 -2 0 0 -8 0 0 0 0 0 0
row: 8 1 1 -1 -1 -1 1 B -B -8 0 0 0 0 0 0
row: 8 1 1 -1 -1 -1 1 -B B -8 0 0 0 0 0 0
row: 14 0 0 0 0 -1 -1 1 1 14 2 0 -2 -2 2 0
row: 21 0 0 0 0 0 0 0 0 21 1 -1 -3 1 -3 1
row: 21 0 0 0 0 0 0 0 0 21 -3 1 -3 1 1 -1
row: 24 A' A -A' -A 0 0 0 0 -24 0 0 0 0 0 0
row: 24 A A' -A -A' 0 0 0 0 -24 0 0 0 0 0 0
)"});

  cents.push_back(CentSpec{
      "m24s8.ctbl", "m24",
      "(1,22,11,16)(2,8,14,17)(3,23,24,6)(4,21,12,13)(5,15,19,9)(7,18,20,10)", Consts{},
      R"(orders: 1 2 2 4 4 12 4 4 12 4 3 4 6 4 2 2 2 4 4 4
row: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
row: 1 -1 1 -1 1 -1 1 1 -1 1 1 -1 1 -1 -1 1 1 -1 -1 -1
row: 1 1 1 -1 -1 -1 -1 -1 -1 -1 1 1 1 1 1 1 1 -1 -1 -1
row: 1 -1 1 1 -1 1 -1 -1 1 -1 1 -1 1 -1 -1 1 1 1 1 1
row: 1 -1 1 -i i i -i -i -i i 1 -1 -1 1 1 -1 -1 i -i i
row: 1 1 1 -i -i i i i -i -i 1 1 -1 -1 -1 -1 -1 i -i i
row: 1 -1 1 i -i -i i i i -i 1 -1 -1 1 1 -1 -1 -i i -i
row: 1 1 1 i i -i -i -i i i 1 1 -1 -1 -1 -1 -1 -i i -i
row: 2 0 2 2 0 -1 0 0 -1 0 -1 0 -1 0 0 2 2 2 2 2
row: 2 0 2 -2 0 1 0 0 1 0 -1 0 -1 0 0 2 2 -2 -2 -2
row: 2 0 2 -2i 0 -i 0 0 i 0 -1 0 1 0 0 -2 -2 2i -2i 2i
row: 2 0 2 2i 0 i 0 0 -i 0 -1 0 1 0 0 -2 -2 -2i 2i -2i
row: 3 -1 -1 1 -1 0 1 -1 0 1 0 1 0 1 -1 -1 3 1 -3 -3
row: 3 1 -1 1 1 0 -1 1 0 -1 0 -1 0 -1 1 -1 3 1 -3 -3
row: 3 -1 -1 -1 1 0 -1 1 0 -1 0 1 0 1 -1 -1 3 -1 3 3
row: 3 1 -1 -1 -1 0 1 -1 0 1 0 -1 0 -1 1 -1 3 -1 3 3
row: 3 -1 -1 i -i 0 -i i 0 i 0 1 0 -1 1 1 -3 -i -3i 3i
row: 3 1 -1 i i 0 i -i 0 -i 0 -1 0 1 -1 1 -3 -i -3i 3i
row: 3 -1 -1 -i i 0 i -i 0 -i 0 1 0 -1 1 1 -3 i 3i -3i
row: 3 1 -1 -i -i 0 -i i 0 i 0 -1 0 1 -1 1 -3 i 3i -3i
)"});

  cents.push_back(CentSpec{
      "m24s6.ctbl", "m24",
      "(1,9,20,17)(2,6)(3,10)(4,8)(5,24,19,7)(11,14,18,23)(12,21,13,15)(16,22)", Consts{},
      R"(orders: 1 3 2 2 4 2 2 6 4 4 4 2 4 4 4 4 4 12 4 12 2 4 4 4 4 2
row: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
row: 1 1 1 -1 -1 1 1 1 1 -1 -1 -1 1 1 1 1 1 -1 -1 -1 -1 -1 -1 -1 -1 1
row: 1 1 1 1 1 1 1 1 1 1 1 1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 1
row: 1 1 1 -1 -1 1 1 1 1 -1 -1 -1 -1 -1 -1 -1 -1 1 1 1 1 1 1 1 1 1
row: 2 -1 2 0 0 2 2 -1 2 0 0 0 0 0 0 0 0 1 -2 1 -2 -2 -2 -2 -2 2
row: 2 -1 2 0 0 2 2 -1 2 0 0 0 0 0 0 0 0 -1 2 -1 2 2 2 2 2 2
row: 3 0 -1 -1 1 3 -1 0 -1 -1 1 -1 -1 -1 -1 1 1 0 3 0 -1 -1 3 -1 3 3
row: 3 0 -1 1 -1 3 -1 0 -1 1 -1 1 1 1 1 -1 -1 0 3 0 -1 -1 3 -1 3 3
row: 3 0 -1 -1 1 3 -1 0 -1 -1 1 -1 1 1 1 -1 -1 0 -3 0 1 1 -3 1 -3 3
row: 3 0 -1 1 -1 3 -1 0 -1 1 -1 1 -1 -1 -1 1 1 0 -3 0 1 1 -3 1 -3 3
row: 3 0 3 1 1 -1 -1 0 -1 -1 -1 1 1 -1 1 -1 1 0 -1 0 -1 -1 3 3 3 3
row: 3 0 -1 1 -1 -1 3 0 -1 -1 1 1 1 -1 1 1 -1 0 -1 0 -1 3 3 -1 3 3
row: 3 0 -1 -1 1 -1 3 0 -1 1 -1 -1 1 -1 1 1 -1 0 1 0 1 -3 -3 1 -3 3
row: 3 0 -1 1 -1 -1 3 0 -1 -1 1 1 -1 1 -1 -1 1 0 1 0 1 -3 -3 1 -3 3
row: 3 0 3 -1 -1 -1 -1 0 -1 1 1 -1 1 -1 1 -1 1 0 1 0 1 1 -3 -3 -3 3
row: 3 0 3 1 1 -1 -1 0 -1 -1 -1 1 -1 1 -1 1 -1 0 1 0 1 1 -3 -3 -3 3
row: 3 0 -1 -1 1 -1 3 0 -1 1 -1 -1 -1 1 -1 -1 1 0 -1 0 -1 3 3 -1 3 3
row: 3 0 3 -1 -1 -1 -1 0 -1 1 1 -1 -1 1 -1 1 -1 0 -1 0 -1 -1 3 3 3 3
row: 4 1 0 2 0 0 0 -1 0 0 0 -2 2i 0 -2i 0 0 i 0 -i 0 0 -4i 0 4i -4
row: 4 1 0 -2 0 0 0 -1 0 0 0 2 -2i 0 2i 0 0 i 0 -i 0 0 -4i 0 4i -4
row: 4 1 0 -2 0 0 0 -1 0 0 0 2 2i 0 -2i 0 0 -i 0 i 0 0 4i 0 -4i -4
row: 4 1 0 2 0 0 0 -1 0 0 0 -2 -2i 0 2i 0 0 -i 0 i 0 0 4i 0 -4i -4
row: 6 0 -2 0 0 -2 -2 0 2 0 0 0 0 0 0 0 0 0 -2 0 2 -2 6 -2 6 6
row: 6 0 -2 0 0 -2 -2 0 2 0 0 0 0 0 0 0 0 0 2 0 -2 2 -6 2 -6 6
row: 8 -1 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 -i 0 i 0 0 -8i 0 8i -8
row: 8 -1 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 i 0 -i 0 0 8i 0 -8i -8
)"});

  cents.push_back(CentSpec{
      "m24s2.ctbl", "m24",
      "(1,20)(5,19)(7,24)(9,17)(11,18)(12,13)(14,23)(15,21)", Consts{{'A', A7}},
      R"(orders: 1 2 3 4 7 7 6 2 2 4 4 2 4 4 6 8 14 6 14 4 2 2 4 12 4 4 4 2 4 2
row: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
row: 3 -1 0 1 A A' 0 -1 3 1 -1 3 -1 -1 0 1 A 0 A' -1 3 -1 1 0 1 -1 -1 -1 3 3
row: 3 -1 0 1 A' A 0 -1 3 1 -1 3 -1 -1 0 1 A' 0 A -1 3 -1 1 0 1 -1 -1 -1 3 3
row: 6 2 0 0 -1 -1 0 2 6 0 2 6 2 2 0 0 -1 0 -1 2 6 2 0 0 0 2 2 2 6 6
row: 7 -1 1 -1 0 0 -1 3 -1 1 -1 7 -1 -1 1 -1 0 1 0 3 -1 3 1 -1 1 -1 -1 3 -1 7
row: 7 3 1 1 0 0 1 3 7 1 3 -1 -1 -1 1 -1 0 -1 0 -1 -1 3 -1 -1 1 -1 -1 -1 -1 7
row: 7 -1 1 -1 0 0 1 -1 7 -1 -1 7 -1 -1 1 -1 0 1 0 -1 7 -1 -1 1 -1 -1 -1 -1 7 7
row: 7 3 1 1 0 0 -1 -1 -1 -1 -1 7 3 3 1 1 0 1 0 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 7
row: 7 -1 1 -1 0 0 1 -1 7 -1 -1 -1 -1 3 1 1 0 -1 0 -1 -1 -1 1 -1 -1 -1 3 3 -1 7
row: 8 0 -1 0 1 1 -1 0 8 0 0 8 0 0 -1 0 1 -1 1 0 8 0 0 -1 0 0 0 0 8 8
row: 8 0 2 0 1 1 0 4 0 2 0 0 0 0 -2 0 -1 0 -1 0 0 -4 0 0 -2 0 0 0 0 -8
row: 14 2 -1 0 0 0 1 2 -2 0 -2 14 2 2 -1 0 0 -1 0 2 -2 2 0 1 0 -2 -2 2 -2 14
row: 14 2 -1 0 0 0 -1 2 14 0 2 -2 -2 2 -1 0 0 1 0 -2 -2 2 0 1 0 -2 2 2 -2 14
row: 21 1 0 -1 0 0 0 5 -3 1 -3 -3 1 -3 0 1 0 0 0 -3 5 5 -1 0 1 1 1 1 -3 21
row: 21 -3 0 1 0 0 0 1 -3 -1 1 21 -3 -3 0 1 0 0 0 1 -3 1 -1 0 -1 1 1 1 -3 21
row: 21 1 0 -1 0 0 0 1 21 -1 1 -3 1 -3 0 1 0 0 0 1 -3 1 1 0 -1 1 -3 -3 -3 21
row: 21 1 0 -1 0 0 0 -3 -3 1 1 -3 -3 5 0 1 0 0 0 1 5 -3 -1 0 1 1 -3 1 -3 21
row: 21 -3 0 1 0 0 0 1 -3 -1 1 -3 1 1 0 -1 0 0 0 -3 5 1 1 0 -1 1 -3 5 -3 21
row: 21 5 0 1 0 0 0 1 -3 -1 -3 -3 -3 1 0 -1 0 0 0 1 5 1 1 0 -1 1 1 -3 -3 21
row: 21 1 0 -1 0 0 0 -3 -3 1 1 21 1 1 0 -1 0 0 0 -3 -3 -3 1 0 1 1 1 -3 -3 21
row: 21 -3 0 1 0 0 0 -3 21 1 -3 -3 1 1 0 -1 0 0 0 1 -3 -3 -1 0 1 1 1 1 -3 21
row: 24 0 0 0 A' A 0 -4 0 2 0 0 0 0 0 0 -A' 0 -A 0 0 4 0 0 -2 0 0 0 0 -24
row: 24 0 0 0 A A' 0 -4 0 2 0 0 0 0 0 0 -A 0 -A' 0 0 4 0 0 -2 0 0 0 0 -24
row: 28 -4 1 0 0 0 -1 4 -4 0 0 -4 0 4 1 0 0 -1 0 0 -4 4 0 1 0 0 0 -4 4 28
row: 28 4 1 0 0 0 -1 -4 -4 0 0 -4 0 -4 1 0 0 -1 0 0 -4 -4 0 1 0 0 0 4 4 28
row: 42 -2 0 0 0 0 0 -2 -6 0 2 -6 2 -2 0 0 0 0 0 2 10 -2 0 0 0 -2 2 -2 -6 42
row: 48 0 0 0 -1 -1 0 8 0 0 0 0 0 0 0 0 1 0 1 0 0 -8 0 0 0 0 0 0 0 -48
row: 56 0 -1 0 0 0 1 0 -8 0 0 -8 0 0 -1 0 0 1 0 0 -8 0 0 -1 0 0 0 0 8 56
row: 56 0 2 0 0 0 0 -4 0 -2 0 0 0 0 -2 0 0 0 0 0 0 4 0 0 2 0 0 0 0 -56
row: 64 0 -2 0 1 1 0 0 0 0 0 0 0 0 2 0 -1 0 -1 0 0 0 0 0 0 0 0 0 0 -64
)"});

  cents.push_back(CentSpec{
      "m24s3.ctbl", "m24",
      "(1,11)(2,23)(3,7)(4,13)(5,6)(8,18)(9,16)(10,15)(12,24)(14,17)(19,21)(20,22)",
      Consts{{'A', Cyclotomic(0) - isqrt5()}},
      R"(orders: 1 5 10 10 10 3 6 12 6 6 2 4 8 8 4 4 2 4 2 4 2 4 4 2 2 4 2 4 2 2
row: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
row: 1 1 1 1 1 1 1 -1 -1 1 1 1 -1 -1 1 -1 1 -1 1 -1 1 1 1 1 1 -1 1 -1 1 -1
row: 4 -1 -1 -1 -1 1 1 1 1 1 4 0 0 0 0 -2 4 -2 4 -2 4 0 0 4 0 0 0 0 0 -2
row: 4 -1 -1 -1 -1 1 1 -1 -1 1 4 0 0 0 0 2 4 2 4 2 4 0 0 4 0 0 0 0 0 2
row: 5 0 0 0 0 -1 -1 1 1 -1 5 1 -1 -1 1 1 5 1 5 1 5 1 1 5 1 -1 1 -1 1 1
row: 5 0 0 0 0 -1 -1 -1 -1 -1 5 1 1 1 1 -1 5 -1 5 -1 5 1 1 5 1 1 1 1 1 -1
row: 6 1 1 1 1 0 0 0 0 0 6 -2 0 0 -2 0 6 0 6 0 6 -2 -2 6 -2 0 -2 0 -2 0
row: 6 1 1 -1 -1 0 0 0 0 0 -2 2 0 0 -2 0 6 0 -2 0 2 0 0 -6 2 2 2 -2 -2 0
row: 6 1 1 -1 -1 0 0 0 0 0 -2 2 0 0 -2 0 6 0 -2 0 2 0 0 -6 2 -2 2 2 -2 0
row: 6 1 1 -1 -1 0 0 0 0 0 -2 -2 2i -2i 2 0 6 0 -2 0 2 0 0 -6 -2 0 -2 0 2 0
row: 6 1 1 -1 -1 0 0 0 0 0 -2 -2 -2i 2i 2 0 6 0 -2 0 2 0 0 -6 -2 0 -2 0 2 0
row: 10 0 0 0 0 1 1 -1 1 -1 2 2 0 0 -2 2 10 2 2 -2 -2 0 0 -10 -2 0 -2 0 2 -2
row: 10 0 0 0 0 1 1 1 -1 -1 2 2 0 0 -2 -2 10 -2 2 2 -2 0 0 -10 -2 0 -2 0 2 2
row: 10 0 0 0 0 1 1 -1 1 -1 2 -2 0 0 2 0 10 -4 2 0 -2 0 0 -10 2 0 2 0 -2 4
row: 10 0 0 0 0 1 1 1 -1 -1 2 -2 0 0 2 0 10 4 2 0 -2 0 0 -10 2 0 2 0 -2 -4
row: 12 2 -2 0 0 0 0 0 0 0 4 0 0 0 0 0 -12 0 -4 0 0 2 -2 0 4 0 -4 0 0 0
row: 12 2 -2 0 0 0 0 0 0 0 4 0 0 0 0 0 -12 0 -4 0 0 -2 2 0 -4 0 4 0 0 0
row: 15 0 0 0 0 0 0 0 0 0 -1 -1 -1 -1 -1 -1 15 3 -1 -1 -1 -1 -1 15 3 1 3 1 3 3
row: 15 0 0 0 0 0 0 0 0 0 -1 3 1 1 3 -1 15 3 -1 -1 -1 -1 -1 15 -1 -1 -1 -1 -1 3
row: 15 0 0 0 0 0 0 0 0 0 -1 3 -1 -1 3 1 15 -3 -1 1 -1 -1 -1 15 -1 1 -1 1 -1 -3
row: 15 0 0 0 0 0 0 0 0 0 -1 -1 1 1 -1 1 15 -3 -1 1 -1 -1 -1 15 3 -1 3 -1 3 -3
row: 20 0 0 0 0 -1 -1 -1 1 1 4 0 0 0 0 -2 20 2 4 2 -4 0 0 -20 0 0 0 0 0 -2
row: 20 0 0 0 0 -1 -1 1 -1 1 4 0 0 0 0 2 20 -2 4 -2 -4 0 0 -20 0 0 0 0 0 2
row: 20 0 0 0 0 2 -2 0 0 0 -4 0 0 0 0 0 -20 0 4 0 0 -2 2 0 4 0 -4 0 0 0
row: 20 0 0 0 0 2 -2 0 0 0 -4 0 0 0 0 0 -20 0 4 0 0 2 -2 0 -4 0 4 0 0 0
row: 24 -1 -1 1 1 0 0 0 0 0 -8 0 0 0 0 0 24 0 -8 0 8 0 0 -24 0 0 0 0 0 0
row: 24 -1 1 A -A 0 0 0 0 0 8 0 0 0 0 0 -24 0 -8 0 0 0 0 0 0 0 0 0 0 0
row: 24 -1 1 -A A 0 0 0 0 0 8 0 0 0 0 0 -24 0 -8 0 0 0 0 0 0 0 0 0 0 0
row: 30 0 0 0 0 0 0 0 0 0 -2 -2 0 0 -2 0 30 0 -2 0 -2 2 2 30 -2 0 -2 0 -2 0
row: 40 0 0 0 0 -2 2 0 0 0 -8 0 0 0 0 0 -40 0 8 0 0 0 0 0 0 0 0 0 0 0
)"});

  int failures = 0;
  for (const auto& spec : groups) {
    try {
      make_group_table(dir, spec);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "FAILED %s: %s\n", spec.file, e.what());
      ++failures;
    }
  }
  for (const auto& spec : cents) {
    try {
      make_cent_table(dir, spec);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "FAILED %s: %s\n", spec.file, e.what());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
