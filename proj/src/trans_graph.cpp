#include "nsw2v/trans_graph.hpp"

#include <unordered_set>

namespace nsw2v {

TransGraph TransGraph::reversed() const {
  TransGraph r;
  r.agents = agents;
  r.edges.reserve(edges.size());
  for (const auto& e : edges) r.edges.push_back({e.to, e.from, e.good, e.target_big, e.source_big});
  return r;
}

TransGraph build_trans_graph(const Instance& inst, const Allocation& from, const Allocation& to) {
  TransGraph g;
  g.agents = inst.agents();
  const auto a = from.owners(inst.goods());
  const auto b = to.owners(inst.goods());
  for (GoodId k = 0; k < inst.goods(); ++k) {
    if (a[k] == b[k]) continue;
    const bool src_big = a[k] != kUnassigned && inst.is_big(a[k], k);
    const bool dst_big = b[k] != kUnassigned && inst.is_big(b[k], k);
    g.edges.push_back({a[k], b[k], k, src_big, dst_big});
  }
  return g;
}

PathReach balancing_reach(const TransGraph& g, AgentId start) {
  if (g.agents > 64) throw std::invalid_argument("balancing-path search supports at most 64 agents");
  PathReach reach(g.agents);
  for (auto& r : reach) r = {{{false, false}, {false, false}}};

  std::vector<std::vector<const TransEdge*>> out(g.agents);
  for (const auto& e : g.edges)
    if (e.from != kUnassigned && e.to != kUnassigned) out[e.from].push_back(&e);

  // DFS over (first class, visited set, current agent, class received).
  struct State {
    bool first;
    std::uint64_t visited;
    AgentId at;
    bool received;
  };
  struct StateHash {
    std::size_t operator()(const State& s) const {
      return std::hash<std::uint64_t>()(s.visited) ^ (s.at * 31 + s.received);
    }
  };
  struct StateEq {
    bool operator()(const State& a, const State& b) const {
      return a.first == b.first && a.visited == b.visited && a.at == b.at && a.received == b.received;
    }
  };
  std::unordered_set<State, StateHash, StateEq> seen;
  std::vector<State> stack;

  const std::uint64_t start_bit = std::uint64_t{1} << start;
  for (const TransEdge* e : out[start]) {
    State s{e->source_big, start_bit | (std::uint64_t{1} << e->to), e->to, e->target_big};
    if (seen.insert(s).second) stack.push_back(s);
  }
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    reach[s.at][s.first][s.received] = true;
    for (const TransEdge* e : out[s.at]) {
      if (e->source_big != s.received) continue;
      if (e->to == start) {
        if (s.first && e->target_big) reach[start][1][1] = true;
        continue;
      }
      const std::uint64_t bit = std::uint64_t{1} << e->to;
      if (s.visited & bit) continue;
      State nxt{s.first, s.visited | bit, e->to, e->target_big};
      if (seen.insert(nxt).second) stack.push_back(nxt);
    }
  }
  return reach;
}

PathClasses classify_paths(const TransGraph& g) {
  PathClasses pc;
  for (AgentId s = 0; s < g.agents; ++s) {
    const auto reach = balancing_reach(g, s);
    for (AgentId j = 0; j < g.agents; ++j) {
      if (j == s) {
        pc.balancing_cycle = pc.balancing_cycle || reach[j][1][1];
        continue;
      }
      pc.ss = pc.ss || reach[j][0][0];
      pc.sb = pc.sb || reach[j][0][1];
      pc.bs = pc.bs || reach[j][1][0];
      pc.bb = pc.bb || reach[j][1][1];
    }
  }
  return pc;
}

std::vector<bool> bb_reachable(const TransGraph& g, AgentId start) {
  const auto reach = balancing_reach(g, start);
  std::vector<bool> out(g.agents, false);
  for (AgentId j = 0; j < g.agents; ++j)
    if (j != start) out[j] = reach[j][1][1];
  return out;
}

}  // namespace nsw2v
