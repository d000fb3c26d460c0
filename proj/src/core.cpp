#include "nsw2v/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nsw2v {

ValuePair canonicalize(Value small, Value big) {
  if (big < 1) throw std::invalid_argument("big value must be at least 1");
  if (small < 0) throw std::invalid_argument("small value must be non-negative");
  if (small >= big) throw std::invalid_argument("small value must be below big value");
  const Value g = std::gcd(small, big);
  return {small / g, big / g};
}

Instance::Instance(std::size_t agents, std::size_t goods, Value small, Value big,
                   std::vector<Bundle> big_sets)
    : n_(agents), m_(goods), big_sets_(std::move(big_sets)) {
  if (n_ == 0) throw std::invalid_argument("instance needs at least one agent");
  if (big_sets_.size() != n_)
    throw std::invalid_argument("expected one big set per agent");
  const ValuePair vp = canonicalize(small, big);
  p_ = vp.small;
  q_ = vp.big;

  big_.assign(n_ * m_, 0);
  eligible_.assign(m_, {});
  for (AgentId i = 0; i < n_; ++i) {
    auto& set = big_sets_[i];
    std::sort(set.begin(), set.end());
    for (std::size_t k = 0; k < set.size(); ++k) {
      const GoodId g = set[k];
      if (g >= m_)
        throw std::invalid_argument("good " + std::to_string(g) + " out of range for agent " +
                                    std::to_string(i));
      if (k > 0 && set[k - 1] == g)
        throw std::invalid_argument("duplicate good " + std::to_string(g) + " for agent " +
                                    std::to_string(i));
      big_[i * m_ + g] = 1;
      eligible_[g].push_back(i);
    }
  }
}

std::vector<GoodId> Instance::big_goods() const {
  std::vector<GoodId> out;
  for (GoodId g = 0; g < m_; ++g)
    if (globally_big(g)) out.push_back(g);
  return out;
}

std::vector<GoodId> Instance::small_goods() const {
  std::vector<GoodId> out;
  for (GoodId g = 0; g < m_; ++g)
    if (!globally_big(g)) out.push_back(g);
  return out;
}

bool Instance::operator==(const Instance& other) const {
  return n_ == other.n_ && m_ == other.m_ && p_ == other.p_ && q_ == other.q_ &&
         big_sets_ == other.big_sets_;
}

std::size_t Allocation::allocated() const {
  std::size_t total = 0;
  for (const auto& b : bundles) total += b.size();
  return total;
}

std::vector<AgentId> Allocation::owners(std::size_t goods) const {
  std::vector<AgentId> out(goods, kUnassigned);
  for (AgentId i = 0; i < bundles.size(); ++i)
    for (GoodId g : bundles[i]) out[g] = i;
  return out;
}

Allocation Allocation::from_owners(std::size_t agents, std::span<const AgentId> owners) {
  Allocation a(agents);
  for (GoodId g = 0; g < owners.size(); ++g)
    if (owners[g] != kUnassigned) a.bundles[owners[g]].push_back(g);
  return a;
}

void Allocation::give(AgentId i, GoodId g) {
  auto& b = bundles[i];
  b.insert(std::lower_bound(b.begin(), b.end(), g), g);
}

bool Allocation::take(AgentId i, GoodId g) {
  auto& b = bundles[i];
  auto it = std::lower_bound(b.begin(), b.end(), g);
  if (it == b.end() || *it != g) return false;
  b.erase(it);
  return true;
}

Value bundle_value(const Instance& inst, AgentId i, const Bundle& bundle) {
  Value v = 0;
  for (GoodId g : bundle) v += inst.value(i, g);
  return v;
}

ValuationProfile valuation_profile(const Instance& inst, const Allocation& alloc) {
  ValuationProfile prof;
  const std::size_t n = alloc.agents();
  prof.big_count.assign(n, 0);
  prof.small_count.assign(n, 0);
  prof.values.assign(n, 0);
  for (AgentId i = 0; i < n; ++i) {
    for (GoodId g : alloc.bundles[i]) {
      if (inst.is_big(i, g))
        ++prof.big_count[i];
      else
        ++prof.small_count[i];
    }
    prof.values[i] = inst.big_value() * static_cast<Value>(prof.big_count[i]) +
                     inst.small_value() * static_cast<Value>(prof.small_count[i]);
  }
  return prof;
}

double log_big(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 1000) return std::log(x.convert_to<double>());
  // The two top limbs carry more precision than a double holds.
  const auto& be = x.backend();
  const std::size_t size = be.size();
  const auto* limbs = be.limbs();
  const double head = std::ldexp(static_cast<double>(limbs[size - 1]), 64) +
                      static_cast<double>(limbs[size - 2]);
  return std::log(head) + static_cast<double>(64 * (size - 2)) * std::log(2.0);
}

NswValue::NswValue(std::size_t agents, BigInt product, Value big_value)
    : n_(agents), product_(std::move(product)), q_(big_value) {}

double NswValue::scaled() const {
  if (product_ == 0 || n_ == 0) return 0.0;
  return std::exp(log_big(product_) / static_cast<double>(n_)) / static_cast<double>(q_);
}

std::strong_ordering NswValue::operator<=>(const NswValue& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("comparing welfare values over different agent counts");
  if (product_ < other.product_) return std::strong_ordering::less;
  if (product_ > other.product_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool NswValue::operator==(const NswValue& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

NswValue nsw_from_values(std::span<const Value> values, Value big_value) {
  BigInt product = 1;
  for (Value v : values) product *= v;
  return NswValue(values.size(), std::move(product), big_value);
}

NswValue nsw_product(const Instance& inst, const Allocation& alloc) {
  const auto prof = valuation_profile(inst, alloc);
  return nsw_from_values(prof.values, inst.big_value());
}

AllocationReport validate_allocation(const Instance& inst, const Allocation& alloc) {
  AllocationReport r;
  const std::size_t m = inst.goods();
  r.shape_ok = alloc.agents() == inst.agents();

  std::vector<AgentId> owner(m, kUnassigned);
  bool disjoint = true;
  bool inside_big_sets = true;
  for (AgentId i = 0; i < alloc.agents(); ++i) {
    for (GoodId g : alloc.bundles[i]) {
      if (g >= m) {
        r.out_of_range.push_back(g);
        continue;
      }
      if (owner[g] != kUnassigned) disjoint = false;
      owner[g] = i;
      if (i >= inst.agents() || !inst.is_big(i, g)) inside_big_sets = false;
    }
  }
  std::sort(r.out_of_range.begin(), r.out_of_range.end());
  r.out_of_range.erase(std::unique(r.out_of_range.begin(), r.out_of_range.end()),
                       r.out_of_range.end());

  const bool in_range = r.out_of_range.empty();
  r.disjoint = disjoint;

  bool covers_all = true;
  bool covers_exactly_big = true;
  for (GoodId g = 0; g < m; ++g) {
    const bool held = owner[g] != kUnassigned;
    if (!held) covers_all = false;
    if (held != inst.globally_big(g)) covers_exactly_big = false;
  }
  r.complete = r.shape_ok && in_range && disjoint && covers_all;
  r.nonwasteful = r.shape_ok && in_range && disjoint && inside_big_sets && covers_exactly_big;
  return r;
}

}  // namespace nsw2v
