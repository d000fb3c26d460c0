#pragma once

// Hardness-reduction instance builders and the LP certificate check behind
// the inapproximability bound at p/q = 4/5.
//
// A d-dimensional matching instance has vertex sets V_0..V_{d-1} of size n
// and a list of edges (one vertex per set). The reductions make one vertex
// good per vertex (good index k*n + v for vertex v of V_k), append dummy
// goods, and create one agent per edge that values its d incident vertex
// goods big and everything else small.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nsw2v/core.hpp"

namespace nsw2v {

using Rational = boost::multiprecision::cpp_rational;

struct PdmInstance {
  std::size_t dim = 3;
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> edges;

  std::size_t edge_count() const { return edges.size(); }
  /// Throws ReductionError unless every edge has `dim` in-range components.
  void validate() const;
};

PdmInstance parse_pdm(std::string_view text);
std::string serialize_pdm(const PdmInstance& g);

/// True if the listed edges are pairwise vertex-disjoint.
bool is_matching(const PdmInstance& g, const std::vector<std::size_t>& edge_ids);

/// Exhaustive search for a perfect matching (n disjoint edges).
std::optional<std::vector<std::size_t>> find_perfect_matching(const PdmInstance& g);

/// Exact-matching reduction: p = dim vertex goods per edge plus q(m - n)
/// dummy goods; values (p, q). Requires q > p >= 3, gcd(p, q) = 1, m >= n.
Instance reduce_pdm(const PdmInstance& g, Value q);

/// Gap-matching reduction at p/q = 4/5 with target matching size k:
/// 4n vertex goods plus 5(m - k) dummies. Requires dim = 4, m = 3n, k <= n.
Instance reduce_gap4dm(const PdmInstance& g, std::size_t k);

/// Matched agents take their incident vertex goods; every other agent takes
/// q dummy goods, dealt in index order. The instance must hold exactly
/// q(m - |matching|) dummies, so for the exact-matching reduction the
/// matching has to be perfect. Vertex goods outside the matching stay
/// unallocated.
Allocation matching_to_allocation(const PdmInstance& g, const std::vector<std::size_t>& matching,
                                  const Instance& inst);

/// All (i, j) >= 0 with q*i + p*j = p*q, for coprime 0 < p < q.
std::vector<std::pair<Value, Value>> coprime_solutions(Value p, Value q);

// LP certificate for the 4/5 gap analysis. x maps a valuation type (i, j),
// i big goods and j small goods worth i + 4j/5, to the fraction of agents
// of that type; alpha is the fraction of vertex goods allocated as small.
struct LpCertificate {
  Rational alpha = 0;
  std::map<std::pair<int, int>, Rational> x;
};

LpCertificate parse_certificate(std::string_view text);
std::string serialize_certificate(const LpCertificate& cert);

/// The known optimal certificate at eps = 0.
LpCertificate reference_certificate();

enum class ConstraintKind { equality, at_most };

struct ConstraintCheck {
  std::string name;
  ConstraintKind kind;
  Rational slack;  // rhs - lhs
  bool satisfied;
  bool tight() const { return satisfied && slack == 0; }
};

struct LpReport {
  bool feasible = false;
  // total (= 1), matched (x_4*), big goods, small goods, bounds (types
  // inside {0..4}x{0..6}, x >= 0, 0 <= alpha <= 1), in that order.
  std::vector<ConstraintCheck> constraints;
  double objective = 0;  // sum x_ij ln(i + 4j/5)
  /// Number of tight constraints among the three capacity inequalities.
  int tight_inequalities() const;
  /// 4 / exp(objective): the inapproximability factor the certificate implies.
  double implied_factor() const;
};

LpReport verify_apx_lp(const LpCertificate& cert, const Rational& eps);

struct HardnessConstants {
  double approx_upper;  // (24/29) exp(110/493)
  double apx_lower;     // 4 / ((4.2 * 3.8)^(1/162) * 4^(160/162))
};

HardnessConstants hardness_constants();

Rational parse_rational(std::string_view tok);
std::string format_rational(const Rational& r);

}  // namespace nsw2v
