#pragma once

// The .ctbl character-table text format:
//
//   ctbl 1
//   group <digest> order <N> degree <n> classes <r>
//   class <i> order <o> size <z> [rep <cycles>]
//   pmap <p>: <c_1> ... <c_r>
//   char: <v_1> | <v_2> | ... | <v_r>
//
// Class and pmap indices are 1-based; values use the cyclotomic text
// serialization.

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nichols/chartab.hpp"
#include "nichols/classes.hpp"
#include "nichols/io.hpp"

namespace nichols {

inline std::string emit_ctbl(const CharacterTable& t) {
  std::ostringstream os;
  os << "ctbl 1\n";
  os << "group " << (t.group_digest.empty() ? "-" : t.group_digest) << " order "
     << t.group_order << " degree " << t.group_degree << " classes " << t.class_count()
     << "\n";
  for (size_t c = 0; c < t.class_count(); ++c) {
    os << "class " << (c + 1) << " order " << t.classes[c].order << " size "
       << t.classes[c].size;
    if (t.classes[c].rep) os << " rep " << t.classes[c].rep->cycles();
    os << "\n";
  }
  for (const auto& [p, pm] : t.power_maps) {
    os << "pmap " << p << ":";
    for (uint32_t c : pm) os << " " << (c + 1);
    os << "\n";
  }
  for (const auto& row : t.rows) {
    os << "char:";
    for (size_t c = 0; c < row.size(); ++c) os << (c ? " | " : " ") << row[c].to_string();
    os << "\n";
  }
  return os.str();
}

inline CharacterTable parse_ctbl(std::istream& in) {
  CharacterTable t;
  std::string line;
  if (!std::getline(in, line) || line.rfind("ctbl", 0) != 0)
    throw std::runtime_error("ctbl: missing header");
  size_t expected_classes = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "group") {
      std::string kw;
      ls >> t.group_digest >> kw >> t.group_order >> kw >> t.group_degree >> kw >>
          expected_classes;
      if (!ls) throw std::runtime_error("ctbl: malformed group line");
    } else if (tag == "class") {
      size_t idx;
      std::string kw;
      CharacterTable::ClassInfo info;
      ls >> idx >> kw >> info.order >> kw >> info.size;
      if (!ls) throw std::runtime_error("ctbl: malformed class line");
      std::string rest;
      std::getline(ls, rest);
      size_t rp = rest.find("rep ");
      if (rp != std::string::npos)
        info.rep = Perm::parse_cycles(rest.substr(rp + 4), t.group_degree);
      if (idx != t.classes.size() + 1) throw std::runtime_error("ctbl: class indices out of order");
      t.classes.push_back(std::move(info));
    } else if (tag == "pmap") {
      std::string head;
      ls >> head;  // "<p>:"
      if (!head.empty() && head.back() == ':') head.pop_back();
      unsigned p = static_cast<unsigned>(std::stoul(head));
      std::vector<uint32_t> pm;
      size_t v;
      while (ls >> v) {
        if (v < 1 || v > t.classes.size()) throw std::runtime_error("ctbl: pmap index range");
        pm.push_back(static_cast<uint32_t>(v - 1));
      }
      if (pm.size() != t.classes.size()) throw std::runtime_error("ctbl: pmap length");
      t.power_maps[p] = std::move(pm);
    } else if (tag == "char:") {
      std::string rest;
      std::getline(ls, rest);
      std::vector<Cyclotomic> row;
      size_t start = 0;
      while (start <= rest.size()) {
        size_t bar = rest.find('|', start);
        std::string cell =
            bar == std::string::npos ? rest.substr(start) : rest.substr(start, bar - start);
        row.push_back(Cyclotomic::from_string(cell));
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
      if (row.size() != t.classes.size()) throw std::runtime_error("ctbl: row length mismatch");
      t.rows.push_back(std::move(row));
    } else {
      throw std::runtime_error("ctbl: unknown line tag " + tag);
    }
  }
  if (t.classes.size() != expected_classes || t.rows.size() != expected_classes)
    throw std::runtime_error("ctbl: truncated table");
  return t;
}

inline CharacterTable load_ctbl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ctbl file: " + path);
  return parse_ctbl(in);
}

namespace ctbl_detail {

inline std::string column_signature(const CharacterTable& t, size_t c) {
  std::vector<std::string> vals;
  for (const auto& row : t.rows) vals.push_back(row[c].to_string());
  std::sort(vals.begin(), vals.end());
  std::ostringstream os;
  os << t.classes[c].order << "/" << t.classes[c].size << "/";
  for (const auto& v : vals) os << v << ";";
  return os.str();
}

// Compares row multisets after permuting a's columns by col_map (column c of
// a aligns with column col_map[c] of b). Rows of a character table are
// pairwise distinct, so multiset equality pins a row bijection.
inline bool rows_equal_under(const CharacterTable& a, const CharacterTable& b,
                             const std::vector<size_t>& col_map) {
  std::vector<std::string> ka, kb;
  for (const auto& row : a.rows) {
    std::ostringstream os;
    std::vector<std::string> cells(row.size());
    for (size_t c = 0; c < row.size(); ++c) cells[col_map[c]] = row[c].to_string();
    for (const auto& s : cells) os << s << "|";
    ka.push_back(os.str());
  }
  for (const auto& row : b.rows) {
    std::ostringstream os;
    for (const auto& v : row) os << v.to_string() << "|";
    kb.push_back(os.str());
  }
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

}  // namespace ctbl_detail

// True when the tables agree up to simultaneous row/column permutation with
// exact cyclotomic equality; columns may only be matched when class order and
// class size agree.
inline bool tables_match(const CharacterTable& a, const CharacterTable& b,
                         uint64_t branch_budget = 1000000) {
  size_t r = a.class_count();
  if (b.class_count() != r || a.irrep_count() != b.irrep_count()) return false;
  if (a.group_order != b.group_order) return false;

  std::vector<std::string> sig_a(r), sig_b(r);
  for (size_t c = 0; c < r; ++c) {
    sig_a[c] = ctbl_detail::column_signature(a, c);
    sig_b[c] = ctbl_detail::column_signature(b, c);
  }
  // candidate targets per column of a
  std::vector<std::vector<size_t>> cands(r);
  for (size_t c = 0; c < r; ++c) {
    for (size_t d = 0; d < r; ++d)
      if (sig_a[c] == sig_b[d]) cands[c].push_back(d);
    if (cands[c].empty()) return false;
  }
  // assign most-constrained first
  std::vector<size_t> order(r);
  for (size_t i = 0; i < r; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return cands[x].size() < cands[y].size(); });

  std::vector<size_t> col_map(r, SIZE_MAX);
  std::vector<bool> used(r, false);
  uint64_t budget = branch_budget;

  std::function<bool(size_t)> assign = [&](size_t i) -> bool {
    if (budget-- == 0) throw budget_error("tables_match: branch budget exhausted");
    if (i == r) return ctbl_detail::rows_equal_under(a, b, col_map);
    size_t c = order[i];
    for (size_t d : cands[c]) {
      if (used[d]) continue;
      col_map[c] = d;
      used[d] = true;
      if (assign(i + 1)) return true;
      used[d] = false;
      col_map[c] = SIZE_MAX;
    }
    return false;
  };
  return assign(0);
}

// Binds a parsed table to a group's class list: permutes columns so that
// column c describes classes[c] of the census. Matching is by (order, size),
// refined by power-map fingerprints, then by explicit representatives; an
// unresolved ambiguity is an error.
inline CharacterTable bind_table(const CharacterTable& t, const PermGroup& G,
                                 const std::vector<ConjClass>& classes,
                                 const ConjBudgets& budgets = {}) {
  size_t r = t.class_count();
  if (classes.size() != r) throw std::runtime_error("bind_table: class count mismatch");
  if (G.order() != t.group_order) throw std::runtime_error("bind_table: group order mismatch");

  // partition refinement over (order, size) then power maps
  std::vector<size_t> color(r), gcolor(r);
  {
    std::map<std::pair<uint64_t, uint64_t>, size_t> ids;
    for (size_t c = 0; c < r; ++c) {
      auto key = std::make_pair(t.classes[c].order, t.classes[c].size);
      auto [it, fresh] = ids.emplace(key, ids.size());
      color[c] = it->second;
    }
    for (size_t c = 0; c < r; ++c) {
      auto key = std::make_pair(classes[c].rep.order(), classes[c].size);
      auto it = ids.find(key);
      if (it == ids.end()) throw std::runtime_error("bind_table: class data mismatch");
      gcolor[c] = it->second;
    }
  }
  // refine table colors with the table's power maps; the group side uses
  // rep powers and is refined in lockstep
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::vector<size_t>, size_t> ids;
    std::vector<size_t> ncolor(r), ngcolor(r);
    for (size_t c = 0; c < r; ++c) {
      std::vector<size_t> key{color[c]};
      for (const auto& [p, pm] : t.power_maps) key.push_back(color[pm[c]]);
      auto [it, fresh] = ids.emplace(key, ids.size());
      ncolor[c] = it->second;
    }
    for (size_t c = 0; c < r; ++c) {
      std::vector<size_t> key{gcolor[c]};
      for (const auto& [p, pm] : t.power_maps) {
        (void)pm;
        // class of rep^p in the census
        Perm pw = classes[c].rep.power(p);
        size_t target = SIZE_MAX;
        for (size_t d = 0; d < r; ++d) {
          if (classes[d].rep.order() != pw.order()) continue;
          if (detail::conjugate_to(G, classes[d], pw, budgets)) {
            target = d;
            break;
          }
        }
        if (target == SIZE_MAX) throw std::runtime_error("bind_table: power map unresolved");
        key.push_back(gcolor[target]);
      }
      auto it = ids.find(key);
      if (it == ids.end()) throw std::runtime_error("bind_table: power fingerprint mismatch");
      ngcolor[c] = it->second;
    }
    if (ncolor != color || ngcolor != gcolor) changed = true;
    color = std::move(ncolor);
    gcolor = std::move(ngcolor);
  }

  // match each table column to a census class
  std::vector<size_t> col_to_class(r, SIZE_MAX);
  std::vector<bool> taken(r, false);
  for (size_t c = 0; c < r; ++c) {
    std::vector<size_t> targets;
    for (size_t d = 0; d < r; ++d)
      if (!taken[d] && gcolor[d] == color[c]) targets.push_back(d);
    if (targets.size() > 1 && t.classes[c].rep) {
      std::vector<size_t> narrowed;
      for (size_t d : targets)
        if (detail::conjugate_to(G, classes[d], *t.classes[c].rep, budgets)) narrowed.push_back(d);
      targets = narrowed;
    }
    if (targets.empty()) throw std::runtime_error("bind_table: binding inconsistent");
    if (targets.size() > 1)
      throw std::runtime_error("bind_table: binding ambiguous (add explicit representatives)");
    col_to_class[c] = targets[0];
    taken[targets[0]] = true;
  }

  CharacterTable out;
  out.group_order = t.group_order;
  out.group_degree = t.group_degree;
  out.group_digest = t.group_digest;
  out.classes.resize(r);
  for (size_t c = 0; c < r; ++c) {
    out.classes[col_to_class[c]] = t.classes[c];
    out.classes[col_to_class[c]].rep = classes[col_to_class[c]].rep;
  }
  for (const auto& [p, pm] : t.power_maps) {
    std::vector<uint32_t> npm(r);
    for (size_t c = 0; c < r; ++c)
      npm[col_to_class[c]] = static_cast<uint32_t>(col_to_class[pm[c]]);
    out.power_maps[p] = std::move(npm);
  }
  for (const auto& row : t.rows) {
    std::vector<Cyclotomic> nrow(r);
    for (size_t c = 0; c < r; ++c) nrow[col_to_class[c]] = row[c];
    out.rows.push_back(std::move(nrow));
  }
  out.validate();
  return out;
}

}  // namespace nichols
