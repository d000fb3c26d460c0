#include "nsw2v/generate.hpp"

#include <string>

namespace nsw2v {

Instance random_instance(std::size_t agents, std::size_t goods, Value small, Value big,
                         std::uint64_t prob_num, std::uint64_t prob_den, std::uint64_t seed) {
  if (agents == 0) throw std::invalid_argument("need at least one agent");
  if (goods < agents) throw std::invalid_argument("need m >= n");
  if (prob_den == 0 || prob_num > prob_den)
    throw std::invalid_argument("big probability must lie in [0, 1]");

  using U128 = unsigned __int128;
  const U128 threshold = static_cast<U128>(prob_num) << 64;
  SplitMix64 rng(seed);
  std::vector<Bundle> sets(agents);
  for (AgentId i = 0; i < agents; ++i)
    for (GoodId g = 0; g < goods; ++g)
      if (static_cast<U128>(rng.next()) * prob_den < threshold) sets[i].push_back(g);
  return Instance(agents, goods, small, big, std::move(sets));
}

}  // namespace nsw2v
