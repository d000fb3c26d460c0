#pragma once

// Instance and allocation model for 2-value additive fair division, with
// exact Nash-social-welfare arithmetic.
//
// Every agent values every good at either p (small) or q (big), 0 <= p < q.
// Agent i's big goods are B_i; the rest of the goods are small for i.
// Values are kept as integers in units of the canonical (coprime) pair, so
// the welfare of an allocation is the integer product of agent values and
// all comparisons between allocations are exact.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nsw2v {

using AgentId = std::size_t;
using GoodId = std::size_t;
using Value = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

/// Sorted list of good indices held by one agent.
using Bundle = std::vector<GoodId>;

inline constexpr AgentId kUnassigned = std::numeric_limits<AgentId>::max();

// Error hierarchy. The CLI maps each kind onto a fixed exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};
class TooFewGoods : public Error {
 public:
  using Error::Error;
};
class DichotomousInstance : public Error {
 public:
  using Error::Error;
};
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};
class ReductionError : public Error {
 public:
  using Error::Error;
};

struct ValuePair {
  Value small = 0;
  Value big = 1;
  bool operator==(const ValuePair&) const = default;
};

/// Divides (small, big) by their gcd. Requires 0 <= small < big.
/// Throws std::invalid_argument otherwise.
ValuePair canonicalize(Value small, Value big);

class Instance {
 public:
  /// Validates the big sets (indices < goods, no duplicates) and reduces
  /// (small, big) to a coprime pair. Big sets are stored sorted.
  Instance(std::size_t agents, std::size_t goods, Value small, Value big,
           std::vector<Bundle> big_sets);

  std::size_t agents() const { return n_; }
  std::size_t goods() const { return m_; }
  Value small_value() const { return p_; }
  Value big_value() const { return q_; }

  const Bundle& big_set(AgentId i) const { return big_sets_[i]; }
  const std::vector<Bundle>& big_sets() const { return big_sets_; }

  bool is_big(AgentId i, GoodId g) const { return big_[i * m_ + g] != 0; }
  Value value(AgentId i, GoodId g) const { return is_big(i, g) ? q_ : p_; }

  /// True if some agent values g at the big value (g is in B).
  bool globally_big(GoodId g) const { return eligible_[g].size() > 0; }
  /// Agents that value g at the big value, increasing.
  const std::vector<AgentId>& eligible(GoodId g) const { return eligible_[g]; }

  /// B: goods big for at least one agent, increasing.
  std::vector<GoodId> big_goods() const;
  /// S: goods small for every agent, increasing.
  std::vector<GoodId> small_goods() const;

  bool operator==(const Instance& other) const;

 private:
  std::size_t n_;
  std::size_t m_;
  Value p_;
  Value q_;
  std::vector<Bundle> big_sets_;
  std::vector<std::uint8_t> big_;
  std::vector<std::vector<AgentId>> eligible_;
};

struct Allocation {
  std::vector<Bundle> bundles;

  Allocation() = default;
  explicit Allocation(std::size_t agents) : bundles(agents) {}
  explicit Allocation(std::vector<Bundle> b) : bundles(std::move(b)) {}

  std::size_t agents() const { return bundles.size(); }
  std::size_t allocated() const;

  /// Owner of every good in [0, goods), kUnassigned when unallocated.
  /// Assumes disjoint bundles with in-range indices.
  std::vector<AgentId> owners(std::size_t goods) const;
  static Allocation from_owners(std::size_t agents,
                                std::span<const AgentId> owners);

  /// Inserts g into bundle i keeping it sorted.
  void give(AgentId i, GoodId g);
  /// Removes g from bundle i; returns false if absent.
  bool take(AgentId i, GoodId g);

  bool operator==(const Allocation&) const = default;
};

struct ValuationProfile {
  std::vector<std::size_t> big_count;
  std::vector<std::size_t> small_count;
  std::vector<Value> values;
};

ValuationProfile valuation_profile(const Instance& inst, const Allocation& alloc);

/// Agent value of a bundle in integer units.
Value bundle_value(const Instance& inst, AgentId i, const Bundle& bundle);

/// Exact product of agent values. Ordered by the product only, so two
/// values are comparable only when they refer to the same agent count.
class NswValue {
 public:
  NswValue(std::size_t agents, BigInt product, Value big_value);

  std::size_t agents() const { return n_; }
  const BigInt& product() const { return product_; }
  bool is_zero() const { return product_ == 0; }

  /// product^(1/n) / q, the welfare with the big value scaled to 1.
  double scaled() const;

  std::strong_ordering operator<=>(const NswValue& other) const;
  bool operator==(const NswValue& other) const;

 private:
  std::size_t n_;
  BigInt product_;
  Value q_;
};

NswValue nsw_product(const Instance& inst, const Allocation& alloc);
NswValue nsw_from_values(std::span<const Value> values, Value big_value);

/// Natural log of a non-negative big integer (-inf for zero).
double log_big(const BigInt& x);

struct AllocationReport {
  bool complete = false;
  bool disjoint = false;
  bool nonwasteful = false;
  bool shape_ok = false;  // one bundle per agent
  std::vector<GoodId> out_of_range;
};

AllocationReport validate_allocation(const Instance& inst, const Allocation& alloc);

}  // namespace nsw2v
