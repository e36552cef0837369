#pragma once

// Brute-force reference computations for tests. None of these call the
// orbit algorithm, the BFS metrics, or power_parts.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "classgraph/graphs.hpp"
#include "classgraph/group.hpp"

namespace oracle {

using classgraph::Group;
using classgraph::Realization;

// Product through raw permutations when available, so the oracle does not
// depend on the group's multiplication table.
inline std::uint32_t multiply(const Group& g, std::uint32_t a, std::uint32_t b) {
  if (g.realization() == Realization::permutation) {
    const auto p = g.permutation(g.element(a)) * g.permutation(g.element(b));
    return g.find(p)->index;
  }
  return g.mul(a, b);
}

inline std::uint32_t invert(const Group& g, std::uint32_t a) {
  for (std::uint32_t b = 0; b < g.order(); ++b)
    if (multiply(g, a, b) == 0) return b;
  return std::numeric_limits<std::uint32_t>::max();
}

// Partition into classes by pairwise conjugation: x ~ y iff y = g^-1 x g for some g.
inline std::vector<std::set<std::uint32_t>> conjugacy_classes(const Group& g) {
  const auto n = static_cast<std::uint32_t>(g.order());
  std::vector<std::uint32_t> inverse(n);
  for (std::uint32_t x = 0; x < n; ++x) inverse[x] = invert(g, x);
  std::vector<bool> done(n, false);
  std::vector<std::set<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::set<std::uint32_t> cls;
    for (std::uint32_t h = 0; h < n; ++h) cls.insert(multiply(g, multiply(g, inverse[h], x), h));
    for (const auto y : cls) done[y] = true;
    out.push_back(std::move(cls));
  }
  return out;
}

inline std::set<std::uint32_t> centralizer(const Group& g, std::uint32_t x) {
  std::set<std::uint32_t> out;
  for (std::uint32_t h = 0; h < g.order(); ++h)
    if (multiply(g, x, h) == multiply(g, h, x)) out.insert(h);
  return out;
}

inline std::set<std::uint32_t> center(const Group& g) {
  std::set<std::uint32_t> out;
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (centralizer(g, x).size() == g.order()) out.insert(x);
  return out;
}

inline std::uint32_t order_by_iteration(const Group& g, std::uint32_t x) {
  std::uint32_t k = 1;
  for (auto y = x; y != 0; y = multiply(g, y, x)) ++k;
  return k;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// The unique pair (a, b) of powers of x with a a p-element, b a p'-element and
// a*b = b*a = x, found by scanning all pairs of powers.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> power_parts(const Group& g, std::uint32_t x,
                                                                          std::uint64_t p) {
  std::vector<std::uint32_t> powers{0};
  for (auto y = x; y != 0; y = multiply(g, y, x)) powers.push_back(y);
  std::vector<std::uint32_t> orders;
  for (const auto y : powers) orders.push_back(order_by_iteration(g, y));
  std::optional<std::pair<std::uint32_t, std::uint32_t>> found;
  int matches = 0;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (!is_power_of(orders[i], p)) continue;
    for (std::size_t j = 0; j < powers.size(); ++j) {
      if (std::gcd<std::uint64_t>(orders[j], p) != 1) continue;
      const auto a = powers[i], b = powers[j];
      if (multiply(g, a, b) == x && multiply(g, b, a) == x) {
        found = {a, b};
        ++matches;
      }
    }
  }
  if (matches != 1) return std::nullopt;
  return found;
}

struct BruteMetrics {
  std::vector<std::size_t> degrees;
  bool regular = false;
  std::size_t k = 0;
  bool complete = false;
  std::size_t components = 0;
  // -1 undefined (empty), -2 infinite
  long diameter = -1;
};

// Adjacency-matrix brute force: Floyd-Warshall distances, components from reachability.
inline BruteMetrics metrics(const classgraph::Graph& graph) {
  const auto n = graph.size();
  BruteMetrics m;
  constexpr long inf = 1'000'000;
  std::vector<long> d(n * n, inf);
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t deg = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && graph.adjacent(u, v)) {
        ++deg;
        d[u * n + v] = 1;
      }
    d[u * n + u] = 0;
    m.degrees.push_back(deg);
  }
  std::sort(m.degrees.begin(), m.degrees.end());
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) d[u * n + v] = std::min(d[u * n + v], d[u * n + w] + d[w * n + v]);
  if (n == 0) return m;
  m.regular = m.degrees.front() == m.degrees.back();
  m.k = m.degrees.front();
  m.complete = m.degrees.front() == n - 1;
  std::vector<bool> counted(n, false);
  for (std::size_t u = 0; u < n; ++u) {
    if (counted[u]) continue;
    ++m.components;
    for (std::size_t v = 0; v < n; ++v)
      if (d[u * n + v] < inf) counted[v] = true;
  }
  long diam = 0;
  for (const auto x : d) diam = std::max(diam, x);
  m.diameter = diam >= inf ? -2 : diam;
  return m;
}

inline bool agrees(const classgraph::GraphMetrics& got, const BruteMetrics& want) {
  using classgraph::Diameter;
  using classgraph::Regularity;
  if (got.degrees != want.degrees || got.components.size() != want.components) return false;
  if (want.diameter == -1) return got.regularity == Regularity::empty && got.diameter.kind == Diameter::Kind::undefined;
  if ((got.regularity == Regularity::regular) != want.regular) return false;
  if (want.regular && got.k != want.k) return false;
  if (got.complete != want.complete) return false;
  if (want.diameter == -2) return got.diameter.kind == Diameter::Kind::infinite;
  return got.diameter.finite() && static_cast<long>(got.diameter.value) == want.diameter;
}

// Graph on vertices 0..n-1 (labels 0..n-1) from a bit mask over the pairs u < v in lexicographic order.
inline classgraph::Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::uint64_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<classgraph::Graph::Edge> edges;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1U) edges.emplace_back(u, v);
  return classgraph::Graph(std::move(labels), edges);
}

}  // namespace oracle
