#pragma once

// Optimal allocation of the goods in B when small values are zeroed.
//
// The result is non-wasteful (every good of B sits with an agent that values
// it big) and its sorted load vector is lexicographically minimal among all
// non-wasteful allocations. That makes it Lorenz dominating: it covers as
// many agents as possible and maximizes the product of positive loads.

#include <vector>

#include "nsw2v/core.hpp"

namespace nsw2v {

struct BigAllocation {
  std::vector<Bundle> bundles;
  std::vector<std::size_t> loads;

  Allocation as_allocation() const { return Allocation(bundles); }
  static BigAllocation from(const Allocation& alloc);
};

/// Greedy seed: goods of B in increasing index, each to the eligible agent
/// with the fewest big goods so far (lowest index on ties).
BigAllocation initial_nonwasteful(const Instance& inst);

/// Trades goods along exchange-graph paths i -> ... -> j with
/// load_i >= load_j + 2 until none exists. An exchange edge (u, w) exists
/// when some good of u's bundle is big for w.
BigAllocation balance_loads(const Instance& inst, BigAllocation ba);

BigAllocation solve_dichotomous(const Instance& inst);

/// Shortest exchange path from `from` to `to` (inclusive), empty if none.
std::vector<AgentId> exchange_path(const Instance& inst, const BigAllocation& ba, AgentId from,
                                   AgentId to);

}  // namespace nsw2v
