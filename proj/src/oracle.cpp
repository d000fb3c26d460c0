#include "nsw2v/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "nsw2v/balance.hpp"

namespace nsw2v {
namespace {

using U128 = unsigned __int128;

BigInt to_big(U128 x) {
  BigInt hi = static_cast<std::uint64_t>(x >> 64);
  return (hi << 64) | BigInt(static_cast<std::uint64_t>(x));
}
BigInt to_big(const BigInt& x) { return x; }

// True when every product of n agent values fits in 127 bits.
bool products_fit_u128(const Instance& inst) {
  const BigInt max_value = BigInt(inst.big_value()) * std::max<std::size_t>(inst.goods(), 1);
  return boost::multiprecision::pow(max_value, static_cast<unsigned>(inst.agents())) <
         (BigInt(1) << 127);
}

template <typename P>
P product_of(const std::vector<Value>& values) {
  P prod = 1;
  for (Value v : values) prod *= static_cast<P>(v);
  return prod;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

void check_budget(std::uint64_t states, std::uint64_t budget) {
  if (states > budget)
    throw BudgetExceeded("oracle needs " + (states == UINT64_MAX ? std::string(">2^64") : std::to_string(states)) +
                         " states, budget is " + std::to_string(budget));
}

// Odometer over owner vectors with owners[0] in [first_lo, first_hi).
template <typename Visit>
void scan(const Instance& inst, AgentId first_lo, AgentId first_hi, Visit&& visit) {
  const std::size_t n = inst.agents();
  const std::size_t m = inst.goods();
  std::vector<AgentId> owners(m, 0);
  std::vector<Value> values(n, 0);
  if (m == 0) {
    if (first_lo == 0) visit(owners, values);
    return;
  }
  if (first_lo >= first_hi) return;
  owners[0] = first_lo;
  for (GoodId g = 0; g < m; ++g) values[owners[g]] += inst.value(owners[g], g);

  while (true) {
    visit(owners, values);
    std::size_t g = m;
    bool advanced = false;
    while (g > 0) {
      --g;
      AgentId o = owners[g];
      values[o] -= inst.value(o, g);
      ++o;
      const AgentId limit = g == 0 ? first_hi : n;
      if (o < limit) {
        owners[g] = o;
        values[o] += inst.value(o, g);
        advanced = true;
        break;
      }
      if (g == 0) break;
      owners[g] = 0;
      values[0] += inst.value(0, g);
    }
    if (!advanced) return;
  }
}

struct Best {
  BigInt product = -1;
  std::vector<AgentId> owners;
};

template <typename P>
Best best_in_range(const Instance& inst, AgentId lo, AgentId hi) {
  P best = 0;
  bool found = false;
  std::vector<AgentId> best_owners;
  scan(inst, lo, hi, [&](const std::vector<AgentId>& owners, const std::vector<Value>& values) {
    const P prod = product_of<P>(values);
    if (!found || prod > best) {
      best = prod;
      best_owners = owners;
      found = true;
    }
  });
  Best out;
  if (found) {
    out.product = to_big(best);
    out.owners = std::move(best_owners);
  }
  return out;
}

template <typename P>
Best best_overall(const Instance& inst, unsigned threads) {
  const std::size_t n = inst.agents();
  const std::size_t workers = inst.goods() == 0 ? 1 : std::clamp<std::size_t>(threads, 1, n);
  if (workers == 1) return best_in_range<P>(inst, 0, n);

  std::vector<Best> parts(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    const AgentId lo = n * w / workers;
    const AgentId hi = n * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] { parts[w] = best_in_range<P>(inst, lo, hi); });
  }
  for (auto& t : pool) t.join();
  // Ranges are in owner order, so a strict comparison keeps the lowest encoding.
  Best merged;
  for (auto& part : parts)
    if (part.product > merged.product) merged = std::move(part);
  return merged;
}

}  // namespace

std::uint64_t state_count(const Instance& inst) {
  std::uint64_t states = 1;
  for (std::size_t g = 0; g < inst.goods(); ++g) states = saturating_mul(states, inst.agents());
  return states;
}

void for_each_allocation(
    const Instance& inst, std::uint64_t budget,
    const std::function<void(std::span<const AgentId>, std::span<const Value>)>& visit) {
  check_budget(state_count(inst), budget);
  scan(inst, 0, inst.agents(), [&](const std::vector<AgentId>& owners, const std::vector<Value>& values) {
    visit(owners, values);
  });
}

Optimum exact_optimum(const Instance& inst, const OracleOptions& opts) {
  check_budget(state_count(inst), opts.budget);
  const Best best = products_fit_u128(inst) ? best_overall<U128>(inst, opts.threads)
                                            : best_overall<BigInt>(inst, opts.threads);
  return {NswValue(inst.agents(), best.product, inst.big_value()),
          Allocation::from_owners(inst.agents(), best.owners)};
}

namespace {

template <typename P>
std::vector<AgentId> closest_in(const Instance& inst, const std::vector<AgentId>& seed_owner) {
  P best_product = 0;
  bool found = false;
  std::size_t best_overlap = 0;
  std::vector<AgentId> best_owners;
  scan(inst, 0, inst.agents(), [&](const std::vector<AgentId>& owners, const std::vector<Value>& values) {
    const P prod = product_of<P>(values);
    if (found && prod < best_product) return;
    std::size_t overlap = 0;
    for (GoodId g = 0; g < owners.size(); ++g) overlap += owners[g] == seed_owner[g];
    if (!found || prod > best_product || overlap > best_overlap) {
      best_product = prod;
      best_overlap = overlap;
      best_owners = owners;
      found = true;
    }
  });
  return best_owners;
}

}  // namespace

Allocation closest_optimum(const Instance& inst, const BigAllocation& seed, const OracleOptions& opts) {
  check_budget(state_count(inst), opts.budget);
  const auto seed_owner = Allocation(seed.bundles).owners(inst.goods());
  return Allocation::from_owners(inst.agents(), products_fit_u128(inst)
                                                    ? closest_in<U128>(inst, seed_owner)
                                                    : closest_in<BigInt>(inst, seed_owner));
}

std::uint64_t pooled_state_count(const Instance& inst) {
  std::uint64_t states = 1;
  for (GoodId g = 0; g < inst.goods(); ++g)
    if (inst.globally_big(g)) states = saturating_mul(states, inst.eligible(g).size() + 1);
  return states;
}

namespace {

// Best split of `pool` identical goods worth p each on top of `base`.
template <typename P>
P best_split(const std::vector<Value>& base, Value p, std::size_t pool, std::vector<std::size_t>* split) {
  const std::size_t n = base.size();
  // table[i][r]: best product for agents i.. receiving exactly r pool goods.
  std::vector<std::vector<P>> table(n, std::vector<P>(pool + 1));
  std::vector<std::vector<std::size_t>> take(n, std::vector<std::size_t>(pool + 1, 0));
  for (std::size_t r = 0; r <= pool; ++r) {
    table[n - 1][r] = static_cast<P>(base[n - 1] + p * static_cast<Value>(r));
    take[n - 1][r] = r;
  }
  for (std::size_t i = n - 1; i-- > 0;) {
    for (std::size_t r = 0; r <= pool; ++r) {
      P best = 0;
      std::size_t arg = 0;
      for (std::size_t k = 0; k <= r; ++k) {
        const P cand = static_cast<P>(base[i] + p * static_cast<Value>(k)) * table[i + 1][r - k];
        if (k == 0 || cand > best) {
          best = cand;
          arg = k;
        }
      }
      table[i][r] = best;
      take[i][r] = arg;
    }
  }
  if (split) {
    split->assign(n, 0);
    std::size_t r = pool;
    for (std::size_t i = 0; i < n; ++i) {
      (*split)[i] = take[i][r];
      r -= take[i][r];
    }
  }
  return table[0][pool];
}

template <typename P>
Optimum pooled_search(const Instance& inst) {
  const std::size_t n = inst.agents();
  const std::size_t m = inst.goods();
  const auto big = inst.big_goods();

  // choice[k] indexes eligible(big[k]); the value eligible.size() means pool.
  std::vector<std::size_t> choice(big.size(), 0);
  std::vector<std::size_t> loads(n, 0);
  for (std::size_t k = 0; k < big.size(); ++k) ++loads[inst.eligible(big[k])[0]];

  bool found = false;
  P best = 0;
  std::vector<std::size_t> best_choice;
  std::vector<Value> base(n);
  auto evaluate = [&] {
    std::size_t assigned = 0;
    for (AgentId i = 0; i < n; ++i) {
      base[i] = inst.big_value() * static_cast<Value>(loads[i]);
      assigned += loads[i];
    }
    const P prod = best_split<P>(base, inst.small_value(), m - assigned, nullptr);
    if (!found || prod > best) {
      best = prod;
      best_choice = choice;
      found = true;
    }
  };

  while (true) {
    evaluate();
    std::size_t k = big.size();
    bool advanced = false;
    while (k > 0) {
      --k;
      const auto& el = inst.eligible(big[k]);
      if (choice[k] < el.size()) --loads[el[choice[k]]];
      ++choice[k];
      if (choice[k] <= el.size()) {
        if (choice[k] < el.size()) ++loads[el[choice[k]]];
        advanced = true;
        break;
      }
      choice[k] = 0;
      ++loads[el[0]];
    }
    if (!advanced) break;
  }

  // Rebuild a concrete allocation from the best configuration.
  Allocation witness(n);
  std::vector<char> placed(m, 0);
  std::fill(loads.begin(), loads.end(), 0);
  for (std::size_t k = 0; k < big.size(); ++k) {
    const auto& el = inst.eligible(big[k]);
    if (best_choice[k] < el.size()) {
      witness.bundles[el[best_choice[k]]].push_back(big[k]);
      ++loads[el[best_choice[k]]];
      placed[big[k]] = 1;
    }
  }
  std::size_t assigned = 0;
  for (AgentId i = 0; i < n; ++i) {
    base[i] = inst.big_value() * static_cast<Value>(loads[i]);
    assigned += loads[i];
  }
  std::vector<std::size_t> split;
  best_split<P>(base, inst.small_value(), m - assigned, &split);
  AgentId next = 0;
  for (GoodId g = 0; g < m; ++g) {
    if (placed[g]) continue;
    while (split[next] == 0) ++next;
    witness.give(next, g);
    --split[next];
  }

  NswValue value = nsw_product(inst, witness);
  if (value.product() != to_big(best))
    throw std::logic_error("pooled oracle witness does not match its relaxed optimum");
  return {std::move(value), std::move(witness)};
}

}  // namespace

Optimum exact_optimum_pooled(const Instance& inst, std::uint64_t budget) {
  check_budget(pooled_state_count(inst), budget);
  return products_fit_u128(inst) ? pooled_search<U128>(inst) : pooled_search<BigInt>(inst);
}

double root_ratio(const BigInt& a, const BigInt& b, std::size_t n) {
  if (a == b) return 1.0;
  return std::exp((log_big(a) - log_big(b)) / static_cast<double>(n));
}

RatioReport ratio(const Instance& inst, const OracleOptions& opts) {
  RatioReport r;
  const Allocation alg = two_value_approx(inst);
  r.alg_product = nsw_product(inst, alg).product();
  r.opt_product = exact_optimum(inst, opts).value.product();
  r.ratio = root_ratio(r.opt_product, r.alg_product, inst.agents());
  return r;
}

std::string ratio_csv_row(const std::string& name, const Instance& inst, const RatioReport& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r.ratio);
  return name + ',' + std::to_string(inst.agents()) + ',' + std::to_string(inst.goods()) + ',' +
         std::to_string(inst.small_value()) + ',' + std::to_string(inst.big_value()) + ',' +
         r.alg_product.str() + ',' + r.opt_product.str() + ',' + buf;
}

}  // namespace nsw2v
