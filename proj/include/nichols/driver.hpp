#pragma once

// Group-level classification driver: census, per-class analyses, the pair
// sweep, and the non-abelian stage on verified negatives.

#include <atomic>
#include <thread>

#include "nichols/criteria.hpp"

namespace nichols {

struct GroupResult {
  std::string name;
  std::vector<ConjClass> classes;
  std::vector<ClassAnalysis> analyses;
  // one per class: present iff some pair of the class reached the
  // non-abelian stage
  std::vector<std::optional<NonAbelianData>> nonabelian;
  std::vector<Verdict> verdicts;  // sorted by (class label, irrep)
};

struct RunFilter {
  std::optional<unsigned> class_label;
  std::optional<size_t> irrep;
};

inline GroupResult classify_group(const PermGroup& G, const std::string& name,
                                  const CriteriaConfig& cfg = {},
                                  const RunFilter& filter = {}, uint64_t census_seed = 0,
                                  unsigned threads = 0) {
  GroupResult out;
  out.name = name;

  ClassConfig ccfg;
  ccfg.enum_budget = cfg.enum_budget;
  ccfg.conj = cfg.conj;
  if (census_seed) ccfg.seed = census_seed;
  out.classes = conjugacy_classes(G, ccfg);
  size_t r = out.classes.size();

  std::vector<size_t> selected;
  for (size_t c = 0; c < r; ++c)
    if (!filter.class_label || out.classes[c].label == *filter.class_label) selected.push_back(c);

  out.analyses.resize(r);
  out.nonabelian.resize(r);

  // per-class analysis, optionally in parallel
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, selected.size() == 0 ? 1 : selected.size());
  {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= selected.size()) break;
        size_t c = selected[i];
        out.analyses[c] = analyze_class(G, out.classes[c], r, cfg);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }

  for (size_t c : selected) {
    const ClassAnalysis& a = out.analyses[c];
    std::vector<Verdict> verdicts;
    for (size_t i = 0; i < a.pair_count; ++i) {
      if (filter.irrep && i != *filter.irrep) continue;
      verdicts.push_back(classify_pair_abelian(name, a, i, cfg));
    }
    bool any_negative = false;
    for (const Verdict& v : verdicts) any_negative = any_negative || v.outcome == Outcome::NegativeBraiding;
    if (any_negative) {
      out.nonabelian[c] = nonabelian_search(G, a, cfg);
      for (Verdict& v : verdicts) apply_nonabelian(v, a, *out.nonabelian[c]);
    }
    for (Verdict& v : verdicts) out.verdicts.push_back(std::move(v));
  }

  std::sort(out.verdicts.begin(), out.verdicts.end(), [](const Verdict& x, const Verdict& y) {
    if (x.class_label != y.class_label) return x.class_label < y.class_label;
    return x.irrep < y.irrep;
  });
  return out;
}

struct OutcomeCounts {
  size_t pairs = 0, infinite = 0, negative = 0, unknown = 0;
  // outcome of the abelian stage alone
  size_t abelian_infinite = 0, abelian_negative = 0;
};

inline OutcomeCounts count_outcomes(const GroupResult& res) {
  OutcomeCounts c;
  for (const Verdict& v : res.verdicts) {
    ++c.pairs;
    switch (v.outcome) {
      case Outcome::Infinite: ++c.infinite; break;
      case Outcome::NegativeBraiding: ++c.negative; break;
      default: ++c.unknown; break;
    }
    bool negative_at_abelian = v.outcome == Outcome::NegativeBraiding ||
                               (v.outcome == Outcome::Infinite && v.stage == Stage::NonAbelian);
    if (negative_at_abelian)
      ++c.abelian_negative;
    else if (v.outcome == Outcome::Infinite)
      ++c.abelian_infinite;
  }
  return c;
}

}  // namespace nichols
