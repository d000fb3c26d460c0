#include "nsw2v/dichotomous.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace nsw2v {
namespace {

constexpr GoodId kNoGood = kUnassigned;

// Lowest-index good of u's bundle that is big for w.
GoodId tradable_good(const Instance& inst, const BigAllocation& ba, AgentId u, AgentId w) {
  for (GoodId g : ba.bundles[u])
    if (inst.is_big(w, g)) return g;
  return kNoGood;
}

// BFS over the exchange graph; neighbours visited in increasing index.
std::vector<AgentId> bfs_parents(const Instance& inst, const BigAllocation& ba, AgentId src) {
  const std::size_t n = inst.agents();
  std::vector<AgentId> parent(n, kUnassigned);
  parent[src] = src;
  std::queue<AgentId> frontier;
  frontier.push(src);
  while (!frontier.empty()) {
    const AgentId u = frontier.front();
    frontier.pop();
    for (AgentId w = 0; w < n; ++w) {
      if (parent[w] != kUnassigned) continue;
      if (tradable_good(inst, ba, u, w) == kNoGood) continue;
      parent[w] = u;
      frontier.push(w);
    }
  }
  return parent;
}

std::vector<AgentId> unwind(const std::vector<AgentId>& parent, AgentId from, AgentId to) {
  std::vector<AgentId> path;
  if (parent[to] == kUnassigned) return path;
  for (AgentId v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

void trade_along(const Instance& inst, BigAllocation& ba, const std::vector<AgentId>& path) {
  // Pick every good before moving any, so each edge trades from the
  // sender's original bundle.
  std::vector<GoodId> goods;
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    goods.push_back(tradable_good(inst, ba, path[k], path[k + 1]));
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    auto& from = ba.bundles[path[k]];
    from.erase(std::find(from.begin(), from.end(), goods[k]));
    auto& to = ba.bundles[path[k + 1]];
    to.insert(std::lower_bound(to.begin(), to.end(), goods[k]), goods[k]);
  }
  --ba.loads[path.front()];
  ++ba.loads[path.back()];
}

}  // namespace

BigAllocation BigAllocation::from(const Allocation& alloc) {
  BigAllocation ba;
  ba.bundles = alloc.bundles;
  for (const auto& b : ba.bundles) ba.loads.push_back(b.size());
  return ba;
}

BigAllocation initial_nonwasteful(const Instance& inst) {
  BigAllocation ba;
  ba.bundles.assign(inst.agents(), {});
  ba.loads.assign(inst.agents(), 0);
  for (GoodId g = 0; g < inst.goods(); ++g) {
    const auto& el = inst.eligible(g);
    if (el.empty()) continue;
    AgentId best = el.front();
    for (AgentId i : el)
      if (ba.loads[i] < ba.loads[best]) best = i;
    ba.bundles[best].push_back(g);
    ++ba.loads[best];
  }
  return ba;
}

std::vector<AgentId> exchange_path(const Instance& inst, const BigAllocation& ba, AgentId from,
                                   AgentId to) {
  return unwind(bfs_parents(inst, ba, from), from, to);
}

BigAllocation balance_loads(const Instance& inst, BigAllocation ba) {
  const std::size_t n = inst.agents();
  std::vector<AgentId> order(n);
  while (true) {
    std::iota(order.begin(), order.end(), AgentId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](AgentId a, AgentId b) { return ba.loads[a] > ba.loads[b]; });
    const std::size_t min_load = n ? ba.loads[order.back()] : 0;

    bool traded = false;
    for (AgentId src : order) {
      if (ba.loads[src] < min_load + 2) break;
      const auto parent = bfs_parents(inst, ba, src);
      AgentId target = kUnassigned;
      for (AgentId w = 0; w < n; ++w) {
        if (parent[w] == kUnassigned || ba.loads[w] + 2 > ba.loads[src]) continue;
        if (target == kUnassigned || ba.loads[w] < ba.loads[target]) target = w;
      }
      if (target == kUnassigned) continue;
      trade_along(inst, ba, unwind(parent, src, target));
      traded = true;
      break;
    }
    if (!traded) return ba;
  }
}

BigAllocation solve_dichotomous(const Instance& inst) {
  return balance_loads(inst, initial_nonwasteful(inst));
}

}  // namespace nsw2v
