#pragma once

// Greedy completion and local search on top of a non-wasteful allocation,
// and the end-to-end two-value approximation algorithm.

#include <vector>

#include "nsw2v/core.hpp"

namespace nsw2v {

/// Adds every good of S, in increasing index, to the agent with minimum
/// current value (lowest index on ties). Requires a non-wasteful input and
/// p >= 1; throws DichotomousInstance for p = 0 and std::invalid_argument
/// for wasteful input.
Allocation phase2_assign_small(const Instance& inst, Allocation alloc);

struct LocalSearchMove {
  GoodId good;
  AgentId from;
  AgentId to;
  Value from_value;  // before the move
  Value to_value;    // before the move
};

struct LocalSearchOptions {
  // Abort with std::logic_error when a move breaks the run properties that
  // hold after an optimal dichotomous seed: the sender holds only goods big
  // for it, the receiver never lost a good, and the good is small for the
  // receiver. Leave off for hand-crafted seeds.
  bool enforce_run_properties = false;
};

struct LocalSearchResult {
  Allocation allocation;
  std::vector<LocalSearchMove> moves;
};

/// Repeatedly moves the good of the max-value agent that most increases the
/// welfare product to the min-value agent, while the increase is strictly
/// positive. Each good moves at most once.
LocalSearchResult run_local_search(const Instance& inst, Allocation alloc,
                                   const LocalSearchOptions& opts = {});

inline Allocation phase3_local_search(const Instance& inst, Allocation alloc) {
  return run_local_search(inst, std::move(alloc)).allocation;
}

/// Phase 2 followed by phase 3 on any non-wasteful allocation.
Allocation balance(const Instance& inst, Allocation nonwasteful,
                   const LocalSearchOptions& opts = {});

/// Optimal dichotomous seed, then balance. Throws TooFewGoods when m < n and
/// DichotomousInstance when p = 0.
Allocation two_value_approx(const Instance& inst);

}  // namespace nsw2v
