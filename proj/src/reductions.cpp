#include "nsw2v/reductions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "text.hpp"

namespace nsw2v {

void PdmInstance::validate() const {
  if (dim == 0) throw ReductionError("matching instance: dimension must be positive");
  if (edges.empty()) throw ReductionError("matching instance: needs at least one edge");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].size() != dim)
      throw ReductionError("matching instance: edge " + std::to_string(e) + " has " +
                           std::to_string(edges[e].size()) + " components, expected " +
                           std::to_string(dim));
    for (std::size_t v : edges[e])
      if (v >= n)
        throw ReductionError("matching instance: edge " + std::to_string(e) + " vertex " +
                             std::to_string(v) + " out of range");
  }
}

PdmInstance parse_pdm(std::string_view text) {
  const auto lines = text::split_lines(text);
  if (lines.empty() || lines[0] != "pdm 1") throw ParseError("matching: missing 'pdm 1' header");
  if (lines.size() < 2) throw ParseError("matching: missing 'p n m' line");
  const auto head = text::split_tokens(lines[1], "matching header");
  if (head.size() != 3) throw ParseError("matching: header must be 'p n m'");
  PdmInstance g;
  g.dim = text::parse_number<std::size_t>(head[0], "matching p");
  g.n = text::parse_number<std::size_t>(head[1], "matching n");
  const auto m = text::parse_number<std::size_t>(head[2], "matching m");
  if (lines.size() < 2 + m) throw ParseError("matching: expected " + std::to_string(m) + " edge lines");
  for (std::size_t k = 2 + m; k < lines.size(); ++k)
    if (!lines[k].empty()) throw ParseError("matching: trailing content");
  for (std::size_t e = 0; e < m; ++e) {
    std::vector<std::size_t> edge;
    for (auto tok : text::split_tokens(lines[2 + e], "matching edge"))
      edge.push_back(text::parse_number<std::size_t>(tok, "matching edge"));
    if (edge.size() != g.dim) throw ParseError("matching: edge " + std::to_string(e) + " has wrong arity");
    for (std::size_t v : edge)
      if (v >= g.n) throw ParseError("matching: edge " + std::to_string(e) + " vertex out of range");
    g.edges.push_back(std::move(edge));
  }
  return g;
}

std::string serialize_pdm(const PdmInstance& g) {
  std::string out = "pdm 1\n";
  out += std::to_string(g.dim) + ' ' + std::to_string(g.n) + ' ' + std::to_string(g.edges.size()) + '\n';
  for (const auto& e : g.edges) out += text::join_indices(e) + '\n';
  return out;
}

bool is_matching(const PdmInstance& g, const std::vector<std::size_t>& edge_ids) {
  std::vector<char> used(g.dim * g.n, 0);
  std::vector<char> seen_edge(g.edges.size(), 0);
  for (std::size_t e : edge_ids) {
    if (e >= g.edges.size() || seen_edge[e]) return false;
    seen_edge[e] = 1;
    for (std::size_t k = 0; k < g.dim; ++k) {
      auto& slot = used[k * g.n + g.edges[e][k]];
      if (slot) return false;
      slot = 1;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> find_perfect_matching(const PdmInstance& g) {
  const std::size_t m = g.edges.size();
  if (g.n == 0) return std::vector<std::size_t>{};
  if (m < g.n) return std::nullopt;
  // Cover vertices of V_0 in order; each must take exactly one edge.
  std::vector<char> used(g.dim * g.n, 0);
  std::vector<std::size_t> chosen;
  auto fits = [&](std::size_t e) {
    for (std::size_t k = 0; k < g.dim; ++k)
      if (used[k * g.n + g.edges[e][k]]) return false;
    return true;
  };
  auto mark = [&](std::size_t e, char on) {
    for (std::size_t k = 0; k < g.dim; ++k) used[k * g.n + g.edges[e][k]] = on;
  };
  std::function<bool(std::size_t)> cover = [&](std::size_t v0) -> bool {
    if (v0 == g.n) return true;
    for (std::size_t e = 0; e < m; ++e) {
      if (g.edges[e][0] != v0 || !fits(e)) continue;
      mark(e, 1);
      chosen.push_back(e);
      if (cover(v0 + 1)) return true;
      chosen.pop_back();
      mark(e, 0);
    }
    return false;
  };
  if (!cover(0)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

Instance build_reduction(const PdmInstance& g, Value p, Value q, std::size_t dummies) {
  const std::size_t vertex_goods = g.dim * g.n;
  std::vector<Bundle> sets;
  sets.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    Bundle b;
    for (std::size_t k = 0; k < g.dim; ++k) b.push_back(k * g.n + e[k]);
    sets.push_back(std::move(b));
  }
  return Instance(g.edges.size(), vertex_goods + dummies, p, q, std::move(sets));
}

}  // namespace

Instance reduce_pdm(const PdmInstance& g, Value q) {
  g.validate();
  const auto p = static_cast<Value>(g.dim);
  if (p < 3) throw ReductionError("exact-matching reduction needs dimension p >= 3");
  if (q <= p) throw ReductionError("exact-matching reduction needs q > p");
  if (std::gcd(p, q) != 1) throw ReductionError("exact-matching reduction needs gcd(p, q) = 1");
  const std::size_t m = g.edges.size();
  if (m < g.n) throw ReductionError("exact-matching reduction needs at least n edges");
  return build_reduction(g, p, q, static_cast<std::size_t>(q) * (m - g.n));
}

Instance reduce_gap4dm(const PdmInstance& g, std::size_t k) {
  if (g.dim != 4) throw ReductionError("gap reduction needs dimension 4");
  g.validate();
  const std::size_t m = g.edges.size();
  if (m != 3 * g.n) throw ReductionError("gap reduction needs m = 3n edges");
  if (k > g.n) throw ReductionError("gap reduction needs target matching size k <= n");
  return build_reduction(g, 4, 5, 5 * (m - k));
}

Allocation matching_to_allocation(const PdmInstance& g, const std::vector<std::size_t>& matching,
                                  const Instance& inst) {
  g.validate();
  const std::size_t m = g.edges.size();
  if (inst.agents() != m) throw ReductionError("instance does not have one agent per edge");
  if (inst.small_value() != static_cast<Value>(g.dim))
    throw ReductionError("instance small value does not match the matching dimension");
  if (!is_matching(g, matching)) throw ReductionError("edge set is not a matching");
  const std::size_t vertex_goods = g.dim * g.n;
  if (inst.goods() < vertex_goods) throw ReductionError("instance lacks vertex goods");
  const auto q = static_cast<std::size_t>(inst.big_value());
  const std::size_t dummies = inst.goods() - vertex_goods;
  if (dummies != q * (m - matching.size()))
    throw ReductionError("matching of size " + std::to_string(matching.size()) + " needs " +
                         std::to_string(q * (m - matching.size())) + " dummy goods, instance has " +
                         std::to_string(dummies));

  std::vector<char> matched(m, 0);
  for (std::size_t e : matching) matched[e] = 1;
  Allocation a(m);
  GoodId next_dummy = vertex_goods;
  for (AgentId e = 0; e < m; ++e) {
    if (matched[e]) {
      for (std::size_t k = 0; k < g.dim; ++k) a.bundles[e].push_back(k * g.n + g.edges[e][k]);
    } else {
      for (std::size_t t = 0; t < q; ++t) a.bundles[e].push_back(next_dummy++);
    }
  }
  return a;
}

std::vector<std::pair<Value, Value>> coprime_solutions(Value p, Value q) {
  if (p <= 0 || q <= p) throw ReductionError("need 0 < p < q");
  if (std::gcd(p, q) != 1) throw ReductionError("need coprime p and q");
  std::vector<std::pair<Value, Value>> out;
  for (Value j = 0; j <= q; ++j) {
    const Value rest = p * q - p * j;
    if (rest >= 0 && rest % q == 0) out.emplace_back(rest / q, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nsw2v
