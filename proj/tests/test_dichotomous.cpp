#include <doctest.h>

#include <queue>

#include "nsw2v/dichotomous.hpp"
#include "nsw2v/generate.hpp"
#include "nsw2v/reductions.hpp"
#include "test_support.hpp"

using namespace nsw2v;
using namespace nsw2v::testing;

namespace {

// Reachability in the exchange graph, recomputed from the big sets.
std::vector<bool> reachable(const Instance& inst, const BigAllocation& ba, AgentId from) {
  std::vector<bool> seen(inst.agents(), false);
  std::queue<AgentId> todo;
  seen[from] = true;
  todo.push(from);
  while (!todo.empty()) {
    const AgentId u = todo.front();
    todo.pop();
    for (AgentId w = 0; w < inst.agents(); ++w) {
      if (seen[w]) continue;
      for (GoodId g : ba.bundles[u])
        if (ref_value(inst, w, g) == inst.big_value()) {
          seen[w] = true;
          todo.push(w);
          break;
        }
    }
  }
  return seen;
}

bool is_nonwasteful(const Instance& inst, const BigAllocation& ba) {
  std::size_t held = 0;
  for (AgentId i = 0; i < inst.agents(); ++i) {
    if (ba.loads[i] != ba.bundles[i].size()) return false;
    for (GoodId g : ba.bundles[i])
      if (ref_value(inst, i, g) != inst.big_value()) return false;
    held += ba.bundles[i].size();
  }
  return held == inst.big_goods().size() && validate_allocation(inst, ba.as_allocation()).disjoint;
}

Instance random_small(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t n = 1 + rng.below(4);
  const std::size_t m = n + rng.below(8 - n);
  return random_instance(n, m, 1, 2, 1 + rng.below(3), 4, seed);
}

}  // namespace

TEST_CASE("initial_nonwasteful examples") {
  CHECK(initial_nonwasteful(example1()).loads == std::vector<std::size_t>{1, 1});

  const Instance none(3, 4, 1, 2, {{}, {}, {}});
  const auto empty = initial_nonwasteful(none);
  CHECK(empty.loads == std::vector<std::size_t>{0, 0, 0});
  CHECK(empty.bundles == std::vector<Bundle>{{}, {}, {}});

  const Instance skew(2, 3, 1, 2, {{0, 1, 2}, {2}});
  const auto ba = initial_nonwasteful(skew);
  CHECK(ba.bundles == std::vector<Bundle>{{0, 1}, {2}});
  CHECK(ba.loads == std::vector<std::size_t>{2, 1});
}

TEST_CASE("balance_loads examples") {
  const Instance skew(2, 3, 1, 2, {{0, 1, 2}, {2}});
  const auto fixed = initial_nonwasteful(skew);
  CHECK(balance_loads(skew, fixed).bundles == fixed.bundles);

  const Instance pair(2, 2, 1, 2, {{0, 1}, {1}});
  BigAllocation start;
  start.bundles = {{0, 1}, {}};
  start.loads = {2, 0};
  const auto moved = balance_loads(pair, start);
  CHECK(moved.bundles == std::vector<Bundle>{{0}, {1}});
  CHECK(moved.loads == std::vector<std::size_t>{1, 1});

  const Instance chain(3, 3, 1, 2, {{0, 1}, {1, 2}, {2}});
  BigAllocation c;
  c.bundles = {{0, 1}, {2}, {}};
  c.loads = {2, 1, 0};
  CHECK(exchange_path(chain, c, 0, 2) == std::vector<AgentId>{0, 1, 2});
  const auto out = balance_loads(chain, c);
  CHECK(out.bundles == std::vector<Bundle>{{0}, {1}, {2}});
  CHECK(dichotomous_reference(chain).lex_min_sorted == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("solve_dichotomous examples") {
  CHECK(solve_dichotomous(example1()).loads == std::vector<std::size_t>{1, 1});

  const Instance solo(1, 4, 1, 3, {{0, 2, 3}});
  CHECK(solve_dichotomous(solo).bundles == std::vector<Bundle>{{0, 2, 3}});

  PdmInstance g;
  g.dim = 3;
  g.n = 1;
  g.edges = {{0, 0, 0}};
  const Instance reduced = reduce_pdm(g, 4);
  CHECK(reduced.goods() == 3);
  CHECK(solve_dichotomous(reduced).loads == std::vector<std::size_t>{3});
}

TEST_CASE("exchange_path is empty without a route") {
  const Instance inst(2, 2, 1, 2, {{0, 1}, {}});
  const auto ba = solve_dichotomous(inst);
  CHECK(exchange_path(inst, ba, 0, 1).empty());
  CHECK(exchange_path(inst, ba, 0, 0) == std::vector<AgentId>{0});
}

TEST_CASE("property: non-wasteful and locally optimal") {
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const Instance inst = random_small(seed);
    const auto ba = solve_dichotomous(inst);
    INFO("seed " << seed);
    REQUIRE(is_nonwasteful(inst, ba));
    CHECK(validate_allocation(inst, ba.as_allocation()).nonwasteful);
    for (AgentId i = 0; i < inst.agents(); ++i) {
      const auto reach = reachable(inst, ba, i);
      for (AgentId j = 0; j < inst.agents(); ++j)
        if (ba.loads[i] >= ba.loads[j] + 2) CHECK_FALSE(reach[j]);
    }
  }
}

TEST_CASE("property: lex-min loads, maximum coverage, best positive product") {
  auto check = [](const Instance& inst) {
    const auto ba = solve_dichotomous(inst);
    const auto ref = dichotomous_reference(inst);
    CHECK(sorted_desc(ba.loads) == ref.lex_min_sorted);
    std::size_t covered = 0;
    BigInt prod = 1;
    for (auto l : ba.loads)
      if (l > 0) {
        ++covered;
        prod *= l;
      }
    CHECK(covered == max_matching(inst));
    CHECK(covered == ref.max_covered);
    CHECK(prod == ref.best_positive_product);
  };
  for (std::uint64_t seed = 1000; seed < 1600; ++seed) check(random_small(seed));
  // Every big-set pattern with three agents and three goods.
  for_each_pattern(3, 3, 1, 2, check);
}
