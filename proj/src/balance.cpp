#include "nsw2v/balance.hpp"

#include <algorithm>
#include <string>

#include "nsw2v/dichotomous.hpp"

namespace nsw2v {
namespace {

using Wide = __int128;

AgentId argmin(const std::vector<Value>& v) {
  return static_cast<AgentId>(std::min_element(v.begin(), v.end()) - v.begin());
}

AgentId argmax(const std::vector<Value>& v) {
  return static_cast<AgentId>(std::max_element(v.begin(), v.end()) - v.begin());
}

std::string describe(const LocalSearchMove& mv) {
  return "good " + std::to_string(mv.good) + " from agent " + std::to_string(mv.from) +
         " (value " + std::to_string(mv.from_value) + ") to agent " + std::to_string(mv.to) +
         " (value " + std::to_string(mv.to_value) + ")";
}

}  // namespace

Allocation phase2_assign_small(const Instance& inst, Allocation alloc) {
  if (inst.small_value() == 0)
    throw DichotomousInstance("small value is 0; greedy completion needs p >= 1");
  if (!validate_allocation(inst, alloc).nonwasteful)
    throw std::invalid_argument("greedy completion needs a non-wasteful allocation");

  auto values = valuation_profile(inst, alloc).values;
  for (GoodId g : inst.small_goods()) {
    const AgentId i = argmin(values);
    alloc.give(i, g);
    values[i] += inst.small_value();
  }
  return alloc;
}

LocalSearchResult run_local_search(const Instance& inst, Allocation alloc,
                                   const LocalSearchOptions& opts) {
  LocalSearchResult res;
  auto values = valuation_profile(inst, alloc).values;
  std::vector<char> moved(inst.goods(), 0);
  std::vector<char> lost(inst.agents(), 0);

  while (true) {
    const AgentId i1 = argmax(values);
    const AgentId i2 = argmin(values);
    if (i1 == i2) break;

    const Wide before = static_cast<Wide>(values[i1]) * values[i2];
    Wide best_gain = 0;
    GoodId best = kUnassigned;
    for (GoodId g : alloc.bundles[i1]) {
      if (moved[g]) continue;
      const Wide after = static_cast<Wide>(values[i1] - inst.value(i1, g)) *
                         (values[i2] + inst.value(i2, g));
      if (after - before > best_gain) {
        best_gain = after - before;
        best = g;
      }
    }
    if (best == kUnassigned) break;

    const LocalSearchMove mv{best, i1, i2, values[i1], values[i2]};
    if (opts.enforce_run_properties) {
      for (GoodId g : alloc.bundles[i1]) {
        if (!inst.is_big(i1, g))
          throw std::logic_error("local search sender holds a small good: " + describe(mv));
        if (inst.is_big(i2, g))
          throw std::logic_error("local search sender holds a good big for the receiver: " +
                                 describe(mv));
      }
      if (lost[i2]) throw std::logic_error("local search receiver lost a good earlier: " + describe(mv));
    }

    alloc.take(i1, best);
    alloc.give(i2, best);
    values[i1] -= inst.value(i1, best);
    values[i2] += inst.value(i2, best);
    moved[best] = 1;
    lost[i1] = 1;
    res.moves.push_back(mv);
  }
  res.allocation = std::move(alloc);
  return res;
}

Allocation balance(const Instance& inst, Allocation nonwasteful, const LocalSearchOptions& opts) {
  return run_local_search(inst, phase2_assign_small(inst, std::move(nonwasteful)), opts).allocation;
}

Allocation two_value_approx(const Instance& inst) {
  if (inst.goods() < inst.agents())
    throw TooFewGoods("need at least as many goods as agents (m=" + std::to_string(inst.goods()) +
                      ", n=" + std::to_string(inst.agents()) + ")");
  if (inst.small_value() == 0)
    throw DichotomousInstance("small value is 0 (dichotomous instance)");
  LocalSearchOptions opts;
  opts.enforce_run_properties = true;
  return balance(inst, solve_dichotomous(inst).as_allocation(), opts);
}

}  // namespace nsw2v
