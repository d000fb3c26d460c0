#include <doctest.h>

#include <cmath>
#include <numeric>

#include "nsw2v/generate.hpp"
#include "nsw2v/oracle.hpp"
#include "nsw2v/reductions.hpp"
#include "test_support.hpp"

using namespace nsw2v;
using namespace nsw2v::testing;

namespace {

PdmInstance make_pdm(std::size_t dim, std::size_t n, std::vector<std::vector<std::size_t>> edges) {
  PdmInstance g;
  g.dim = dim;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

PdmInstance random_pdm(std::size_t dim, std::size_t n, std::size_t m, SplitMix64& rng) {
  PdmInstance g;
  g.dim = dim;
  g.n = n;
  for (std::size_t e = 0; e < m; ++e) {
    std::vector<std::size_t> edge(dim);
    for (auto& v : edge) v = rng.below(n);
    g.edges.push_back(edge);
  }
  return g;
}

// Perfect-matching existence by trying every n-subset of edges.
bool has_perfect_matching(const PdmInstance& g) {
  const std::size_t m = g.edges.size();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != g.n) continue;
    std::vector<std::vector<char>> used(g.dim, std::vector<char>(g.n, 0));
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1)) continue;
      for (std::size_t k = 0; k < g.dim && ok; ++k) {
        if (used[k][g.edges[e][k]]) ok = false;
        used[k][g.edges[e][k]] = 1;
      }
    }
    if (ok) return true;
  }
  return false;
}

BigInt power(BigInt b, std::size_t e) {
  BigInt r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("reduce_pdm counts") {
  const auto one = make_pdm(3, 1, {{0, 0, 0}});
  const Instance a = reduce_pdm(one, 4);
  CHECK(a.agents() == 1);
  CHECK(a.goods() == 3);
  CHECK(a.big_set(0) == Bundle{0, 1, 2});
  CHECK(a.small_value() == 3);
  CHECK(a.big_value() == 4);

  const auto two = make_pdm(3, 2, {{0, 0, 0}, {1, 1, 1}, {0, 1, 1}});
  const Instance b = reduce_pdm(two, 5);
  CHECK(b.agents() == 3);
  CHECK(b.goods() == 6 + 5);
  CHECK(b.big_set(2) == Bundle{0, 3, 5});
  CHECK(b.globally_big(5));
  CHECK_FALSE(b.globally_big(6));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 1 + rng.below(4);
    const auto g = random_pdm(3, n, n + rng.below(4), rng);
    const Instance inst = reduce_pdm(g, 7);
    CHECK(inst.goods() == 3 * n + 7 * (g.edges.size() - n));
    CHECK(inst.goods() >= inst.agents());
  }
}

TEST_CASE("reduce_pdm preconditions") {
  const auto g = make_pdm(3, 1, {{0, 0, 0}});
  CHECK_THROWS_AS(reduce_pdm(g, 3), ReductionError);
  CHECK_THROWS_AS(reduce_pdm(g, 2), ReductionError);
  CHECK_THROWS_AS(reduce_pdm(g, 6), ReductionError);
  CHECK_THROWS_AS(reduce_pdm(make_pdm(2, 1, {{0, 0}}), 3), ReductionError);
  CHECK_THROWS_AS(reduce_pdm(make_pdm(3, 2, {{0, 0, 0}}), 4), ReductionError);
  CHECK_THROWS_AS(reduce_pdm(make_pdm(3, 1, {{0, 1, 0}}), 4), ReductionError);
  CHECK_THROWS_AS(reduce_pdm(make_pdm(3, 1, {{0, 0}}), 4), ReductionError);
}

TEST_CASE("matching_to_allocation") {
  const auto one = make_pdm(3, 1, {{0, 0, 0}});
  const Instance a = reduce_pdm(one, 4);
  const Allocation x = matching_to_allocation(one, {0}, a);
  CHECK(x.bundles == std::vector<Bundle>{{0, 1, 2}});
  CHECK(nsw_product(a, x).scaled() == doctest::Approx(3.0).epsilon(1e-12));

  const auto two = make_pdm(3, 2, {{0, 0, 0}, {1, 1, 1}, {0, 1, 1}});
  const Instance b = reduce_pdm(two, 5);
  const Allocation y = matching_to_allocation(two, {0, 1}, b);
  CHECK(y.bundles == std::vector<Bundle>{{0, 2, 4}, {1, 3, 5}, {6, 7, 8, 9, 10}});
  CHECK(valuation_profile(b, y).values == std::vector<Value>{15, 15, 15});
  CHECK(nsw_product(b, y).scaled() == doctest::Approx(3.0).epsilon(1e-12));

  const auto square = make_pdm(3, 2, {{0, 0, 0}, {1, 1, 1}});
  const Instance c = reduce_pdm(square, 4);
  CHECK(c.goods() == 6);
  CHECK(validate_allocation(c, matching_to_allocation(square, {0, 1}, c)).complete);

  CHECK_THROWS_AS(matching_to_allocation(two, {0, 2}, b), ReductionError);
  CHECK_THROWS_AS(matching_to_allocation(two, {0}, b), ReductionError);
}

TEST_CASE("coprime_solutions") {
  using Sol = std::vector<std::pair<Value, Value>>;
  auto sorted = [](Sol s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(sorted(coprime_solutions(3, 5)) == Sol{{0, 5}, {3, 0}});
  CHECK(sorted(coprime_solutions(4, 5)) == Sol{{0, 5}, {4, 0}});
  CHECK(sorted(coprime_solutions(1, 2)) == Sol{{0, 2}, {1, 0}});
  CHECK_THROWS_AS(coprime_solutions(2, 4), ReductionError);
  CHECK_THROWS_AS(coprime_solutions(5, 3), ReductionError);

  for (Value q = 2; q <= 30; ++q)
    for (Value p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      // Independent count: every j in [0, q] with q | p(q - j).
      Sol expected;
      for (Value j = 0; j <= q; ++j)
        if ((p * q - p * j) % q == 0) expected.push_back({(p * q - p * j) / q, j});
      CHECK(sorted(coprime_solutions(p, q)) == sorted(expected));
      CHECK(sorted(coprime_solutions(p, q)) == Sol{{0, q}, {p, 0}});
    }
}

TEST_CASE("reduce_gap4dm") {
  const auto g = make_pdm(4, 1, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  const Instance a = reduce_gap4dm(g, 1);
  CHECK(a.agents() == 3);
  CHECK(a.goods() == 4 + 10);
  CHECK(a.small_value() == 4);
  CHECK(a.big_value() == 5);
  CHECK(reduce_gap4dm(g, 0).goods() == 4 + 15);

  const Allocation x = matching_to_allocation(g, {0}, a);
  CHECK(valuation_profile(a, x).values == std::vector<Value>{20, 20, 20});
  CHECK(nsw_product(a, x).scaled() == doctest::Approx(4.0).epsilon(1e-12));

  CHECK_THROWS_AS(reduce_gap4dm(g, 2), ReductionError);
  CHECK_THROWS_AS(reduce_gap4dm(make_pdm(3, 1, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}), 1), ReductionError);
  CHECK_THROWS_AS(reduce_gap4dm(make_pdm(4, 1, {{0, 0, 0, 0}}), 1), ReductionError);
}

TEST_CASE("gap instance valuation bounds by enumeration") {
  const auto g = make_pdm(4, 1, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  const Instance inst = reduce_gap4dm(g, 1);
  const BigInt best = exact_optimum_pooled(inst).value.product();
  bool every_has_low = true;
  bool optimal_capped = true;
  std::size_t optima = 0;
  for_each_allocation(inst, 5'000'000, [&](std::span<const AgentId>, std::span<const Value> values) {
    Value lo = values[0], hi = values[0];
    BigInt prod = 1;
    for (Value v : values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      prod *= v;
    }
    // Scaled by q = 5: 4 -> 20, 4.8 -> 24.
    every_has_low = every_has_low && lo <= 20;
    if (prod == best) {
      ++optima;
      optimal_capped = optimal_capped && hi <= 24;
    }
  });
  CHECK(optima > 0);
  CHECK(every_has_low);
  CHECK(optimal_capped);
}

TEST_CASE("property: exact-matching reduction completeness and soundness") {
  std::size_t with = 0, without = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t n = 1 + rng.below(3);
    const std::size_t m = n + rng.below(6 - n);
    const Value q = std::array<Value, 3>{4, 5, 7}[rng.below(3)];
    const auto g = random_pdm(3, n, m, rng);
    const Instance inst = reduce_pdm(g, q);
    const Optimum opt = exact_optimum_pooled(inst);
    const BigInt full = power(BigInt(3 * q), m);
    INFO("seed " << seed);
    const auto found = find_perfect_matching(g);
    CHECK(found.has_value() == has_perfect_matching(g));
    if (found) {
      ++with;
      CHECK(is_matching(g, *found));
      CHECK(opt.value.product() == full);
      CHECK(nsw_product(inst, matching_to_allocation(g, *found, inst)).product() == full);
    } else {
      ++without;
      CHECK(opt.value.product() < full);
    }
    if (state_count(inst) <= 200'000) CHECK(opt.value.product() == brute_force_product(inst));
  }
  CHECK(with > 0);
  CHECK(without > 0);
}

TEST_CASE("LP certificate") {
  const LpReport rep = verify_apx_lp(reference_certificate(), 0);
  CHECK(rep.feasible);
  REQUIRE(rep.constraints.size() == 5);
  CHECK(rep.constraints[0].name == "total");
  CHECK(rep.constraints[0].slack == 0);
  for (int k = 1; k <= 3; ++k) CHECK(rep.constraints[k].tight());
  CHECK(rep.tight_inequalities() == 3);
  const double expected = (std::log(4.2) + std::log(3.8) + 160 * std::log(4.0)) / 162;
  CHECK(std::abs(rep.objective - expected) < 1e-12);
  CHECK(std::abs(rep.implied_factor() - std::pow(16.0 / 15.96, 1.0 / 162)) < 1e-9);

  const LpReport loose = verify_apx_lp(reference_certificate(), Rational(1, 10));
  CHECK(loose.feasible);
  CHECK(loose.tight_inequalities() == 1);

  LpCertificate zero;
  CHECK_FALSE(verify_apx_lp(zero, 0).feasible);
  CHECK(verify_apx_lp(zero, 0).constraints[0].slack == 1);

  LpCertificate all_matched;
  all_matched.x[{4, 0}] = 1;
  const LpReport bad = verify_apx_lp(all_matched, 0);
  CHECK_FALSE(bad.feasible);
  CHECK(bad.constraints[0].satisfied);
  CHECK_FALSE(bad.constraints[1].satisfied);
  CHECK(bad.constraints[1].slack == Rational(53, 162) - 1);
  CHECK_FALSE(bad.constraints[2].satisfied);
  CHECK(bad.constraints[2].slack == Rational(4, 3) - 4);

  LpCertificate negative = reference_certificate();
  negative.x[{2, 2}] = Rational(-1, 100);
  negative.x[{0, 5}] += Rational(1, 100);
  CHECK_FALSE(verify_apx_lp(negative, 0).constraints[4].satisfied);

  LpCertificate outside = reference_certificate();
  outside.x[{5, 0}] = 0;
  CHECK_FALSE(verify_apx_lp(outside, 0).feasible);
}

TEST_CASE("hardness constants") {
  const auto h = hardness_constants();
  CHECK(h.approx_upper > 1.0344);
  CHECK(h.approx_upper < 1.0345);
  CHECK(h.apx_lower > 1.0000154);
  CHECK(h.apx_lower < 1.0000155);
  CHECK(std::abs(h.apx_lower - std::pow(16.0 / 15.96, 1.0 / 162)) < 1e-12);
}

TEST_CASE("file formats") {
  const auto g = make_pdm(3, 2, {{0, 0, 0}, {1, 1, 1}, {0, 1, 1}});
  const std::string text = serialize_pdm(g);
  CHECK(text == "pdm 1\n3 2 3\n0 0 0\n1 1 1\n0 1 1\n");
  const PdmInstance back = parse_pdm(text);
  CHECK(back.dim == 3);
  CHECK(back.n == 2);
  CHECK(back.edges == g.edges);
  CHECK_THROWS(parse_pdm("pdm 1\n3 2 1\n0 0 2\n"));
  CHECK_THROWS(parse_pdm("pdm 2\n3 2 1\n0 0 0\n"));
  CHECK_THROWS(parse_pdm("pdm 1\n3 2 2\n0 0 0\n"));

  const LpCertificate ref = reference_certificate();
  const std::string cert = serialize_certificate(ref);
  CHECK(cert == "lpcert 1\nalpha 0/1\n0 5 107/162\n1 4 1/162\n3 1 1/162\n4 0 53/162\n");
  const LpCertificate parsed = parse_certificate(cert);
  CHECK(parsed.alpha == ref.alpha);
  CHECK(parsed.x == ref.x);
  CHECK_THROWS(parse_certificate("lpcert 1\n"));

  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(format_rational(Rational(-2, 4)) == "-1/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}
