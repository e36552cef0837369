#include "classgraph/graphs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "classgraph/number_theory.hpp"

namespace classgraph {

Graph::Graph(std::vector<std::uint64_t> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)), adjacency_(labels_.size()), matrix_(labels_.size() * labels_.size(), 0) {
  const auto n = labels_.size();
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n || u == v) throw std::invalid_argument("graph edge out of range or a loop");
    if (matrix_[u * n + v]) throw std::invalid_argument("duplicate graph edge");
    matrix_[u * n + v] = matrix_[v * n + u] = 1;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (const auto v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::position(std::uint64_t label) const {
  return static_cast<std::size_t>(std::find(labels_.begin(), labels_.end(), label) - labels_.begin());
}

SizeGraph gamma_from_sizes(const std::vector<std::uint64_t>& sizes) {
  std::set<std::uint64_t> distinct;
  for (const auto s : sizes)
    if (s > 1) distinct.insert(s);
  std::vector<std::uint64_t> labels(distinct.begin(), distinct.end());
  std::vector<Graph::Edge> edges;
  for (std::size_t u = 0; u < labels.size(); ++u)
    for (std::size_t v = u + 1; v < labels.size(); ++v)
      if (std::gcd(labels[u], labels[v]) > 1) edges.emplace_back(u, v);
  return {Graph(std::move(labels), edges)};
}

PrimeGraph delta_from_sizes(const std::vector<std::uint64_t>& sizes) {
  std::set<std::uint64_t> primes;
  std::set<std::pair<std::uint64_t, std::uint64_t>> joint;
  for (const auto s : sizes) {
    const auto ps = prime_divisors(s);
    primes.insert(ps.begin(), ps.end());
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) joint.emplace(ps[i], ps[j]);
  }
  std::vector<std::uint64_t> labels(primes.begin(), primes.end());
  auto pos = [&](std::uint64_t p) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), p) - labels.begin());
  };
  std::vector<Graph::Edge> edges;
  for (const auto& [p, q] : joint) edges.emplace_back(pos(p), pos(q));
  return {Graph(std::move(labels), edges)};
}

SizeGraph build_gamma(const ClassTable& classes) { return gamma_from_sizes(classes.sizes()); }

PrimeGraph build_delta(const ClassTable& classes) { return delta_from_sizes(classes.sizes()); }

GraphMetrics metrics(const Graph& graph) {
  GraphMetrics m;
  const auto n = graph.size();
  for (std::size_t v = 0; v < n; ++v) m.degrees.push_back(graph.degree(v));
  std::sort(m.degrees.begin(), m.degrees.end());

  if (n == 0) {
    m.regularity = Regularity::empty;
    m.diameter = {Diameter::Kind::undefined, 0};
    return m;
  }
  if (m.degrees.front() == m.degrees.back()) {
    m.regularity = Regularity::regular;
    m.k = m.degrees.front();
  } else {
    m.regularity = Regularity::not_regular;
  }
  m.complete = graph.edge_count() == n * (n - 1) / 2;

  // Breadth-first search from every vertex gives both components and eccentricities.
  constexpr auto unreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> component_of(n, unreached);
  std::size_t eccentricity_max = 0;
  std::vector<std::size_t> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), unreached);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    std::vector<std::size_t> reached;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      reached.push_back(u);
      for (const auto w : graph.neighbors(u))
        if (dist[w] == unreached) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
    }
    for (const auto u : reached) eccentricity_max = std::max(eccentricity_max, dist[u]);
    if (component_of[s] == unreached) {
      std::sort(reached.begin(), reached.end());
      for (const auto u : reached) component_of[u] = m.components.size();
      m.components.push_back(std::move(reached));
    }
  }

  if (m.components.size() > 1)
    m.diameter = {Diameter::Kind::infinite, 0};
  else
    m.diameter = {Diameter::Kind::finite, eccentricity_max};
  return m;
}

std::vector<std::vector<std::uint64_t>> partner_partition(const Graph& graph) {
  std::map<std::vector<std::size_t>, std::vector<std::uint64_t>> blocks;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    auto closed = graph.neighbors(v);
    closed.insert(std::upper_bound(closed.begin(), closed.end(), v), v);
    blocks[closed].push_back(graph.label(v));
  }
  std::vector<std::vector<std::uint64_t>> out;
  for (auto& [key, block] : blocks) {
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::string to_dot(const Graph& graph, const std::string& name) {
  std::ostringstream out;
  std::string escaped;
  for (const char c : name) {
    if (c == '"' || c == '\\') escaped += '\\';
    escaped += c;
  }
  out << "graph \"" << escaped << "\" {\n";
  for (const auto label : graph.labels()) out << "  " << label << ";\n";
  for (const auto& [u, v] : graph.edges()) out << "  " << graph.label(u) << " -- " << graph.label(v) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace classgraph
