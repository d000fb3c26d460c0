#pragma once

// Exhaustive exact optimum and the approximation-ratio harness.
//
// The brute force enumerates owner vectors (owner of good 0, owner of good
// 1, ...) in lexicographic order, so the first maximum found is the witness
// with the lowest encoding.

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "nsw2v/core.hpp"
#include "nsw2v/dichotomous.hpp"

namespace nsw2v {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct OracleOptions {
  std::uint64_t budget = kDefaultBudget;
  // Worker threads for the brute force. Results are identical for any count.
  unsigned threads = 1;
};

struct Optimum {
  NswValue value;
  Allocation witness;
};

/// n^m, saturating at UINT64_MAX.
std::uint64_t state_count(const Instance& inst);

/// Calls visit(owners, values) for every complete allocation in
/// lexicographic owner order. Throws BudgetExceeded above the budget.
void for_each_allocation(
    const Instance& inst, std::uint64_t budget,
    const std::function<void(std::span<const AgentId>, std::span<const Value>)>& visit);

/// Maximum welfare product over all complete allocations.
Optimum exact_optimum(const Instance& inst, const OracleOptions& opts = {});

/// Among all product-maximal allocations, the one with the most goods held
/// by the same agent as in `seed`; lowest encoding on ties.
Allocation closest_optimum(const Instance& inst, const BigAllocation& seed,
                           const OracleOptions& opts = {});

/// Exact optimum that treats goods not given to a big-valuing agent as an
/// interchangeable pool of small goods. It enumerates, for every good of B,
/// either an eligible agent or the pool, and splits the pool by dynamic
/// programming. Lossless: a relaxed configuration is never worth more than
/// the allocation built from it, and every allocation is a configuration.
/// The witness is not necessarily the lowest encoding. The budget bounds
/// the number of configurations.
Optimum exact_optimum_pooled(const Instance& inst, std::uint64_t budget = kDefaultBudget);

/// Number of configurations the pooled oracle visits, saturating.
std::uint64_t pooled_state_count(const Instance& inst);

struct RatioReport {
  BigInt alg_product;
  BigInt opt_product;
  double ratio = 1.0;  // (opt / alg)^(1/n)
};

/// Runs two_value_approx and exact_optimum on the same instance.
RatioReport ratio(const Instance& inst, const OracleOptions& opts = {});

/// (a / b)^(1/n) computed through logarithms.
double root_ratio(const BigInt& a, const BigInt& b, std::size_t n);

inline constexpr const char* kRatioCsvHeader = "instance,n,m,p,q,alg_product,opt_product,ratio";
std::string ratio_csv_row(const std::string& name, const Instance& inst, const RatioReport& r);

}  // namespace nsw2v
