#pragma once

// Transformation graph between two allocations of the same instance, and
// balancing-path diagnostics on it.
//
// The graph from A to A' has one edge per good placed differently: the edge
// runs from the good's owner in A to its owner in A'. A good missing from
// one side gets an edge with a kUnassigned endpoint; such edges are listed
// but never lie on a path.
//
// A path is balancing when every interior agent gives away a good of the
// same size class (big or small, for that agent) as the one it receives.
// Its type is the class of the first good for the source and of the last
// good for the target. A BB-balancing path that returns to its start is a
// balancing cycle. Paths are simple.

#include <array>
#include <vector>

#include "nsw2v/core.hpp"

namespace nsw2v {

struct TransEdge {
  AgentId from;
  AgentId to;
  GoodId good;
  bool source_big;  // good is big for `from`
  bool target_big;  // good is big for `to`
  bool operator==(const TransEdge&) const = default;
};

struct TransGraph {
  std::size_t agents = 0;
  std::vector<TransEdge> edges;

  /// Graph of the swapped pair.
  TransGraph reversed() const;
};

TransGraph build_trans_graph(const Instance& inst, const Allocation& from, const Allocation& to);

struct PathClasses {
  bool ss = false;
  bool sb = false;
  bool bs = false;
  bool bb = false;
  bool balancing_cycle = false;
  bool operator==(const PathClasses&) const = default;
};

/// Which balancing-path types exist anywhere in the graph.
PathClasses classify_paths(const TransGraph& g);

/// reach[j][s][t]: a balancing path from `start` to j exists whose first
/// good has class s for `start` and whose last good has class t for j
/// (index 1 = big). Entry [start] reports balancing cycles in [1][1].
using PathReach = std::vector<std::array<std::array<bool, 2>, 2>>;
PathReach balancing_reach(const TransGraph& g, AgentId start);

/// Agents reachable from `start` by a BB-balancing path.
std::vector<bool> bb_reachable(const TransGraph& g, AgentId start);

}  // namespace nsw2v
