#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "classgraph/conjugacy.hpp"

namespace classgraph {

// Small simple undirected graph with integer vertex labels.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  // Edges are vertex positions; loops and duplicates are rejected.
  Graph(std::vector<std::uint64_t> labels, const std::vector<Edge>& edges);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::uint64_t>& labels() const { return labels_; }
  std::uint64_t label(std::size_t v) const { return labels_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return matrix_[u * size() + v] != 0; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  std::size_t edge_count() const { return edge_count_; }
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  // Position of a label, or size() when absent.
  std::size_t position(std::uint64_t label) const;

 private:
  std::vector<std::uint64_t> labels_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<unsigned char> matrix_;
  std::size_t edge_count_ = 0;
};

// Common-divisor graph on the distinct noncentral class sizes.
struct SizeGraph {
  Graph graph;
};

// Prime graph on the primes dividing some class size.
struct PrimeGraph {
  Graph graph;
};

SizeGraph build_gamma(const ClassTable& classes);
PrimeGraph build_delta(const ClassTable& classes);

// Gamma on an explicit list of class sizes (duplicates and 1s allowed).
SizeGraph gamma_from_sizes(const std::vector<std::uint64_t>& sizes);
PrimeGraph delta_from_sizes(const std::vector<std::uint64_t>& sizes);

enum class Regularity { empty, not_regular, regular };

struct Diameter {
  enum class Kind { finite, infinite, undefined };
  Kind kind = Kind::undefined;
  std::size_t value = 0;

  bool finite() const { return kind == Kind::finite; }
  friend bool operator==(const Diameter&, const Diameter&) = default;
};

struct GraphMetrics {
  std::vector<std::size_t> degrees;  // ascending
  Regularity regularity = Regularity::empty;
  std::size_t k = 0;  // common degree when regular
  bool complete = false;
  // Vertex positions per component; components ordered by smallest member.
  std::vector<std::vector<std::size_t>> components;
  Diameter diameter;

  bool regular_with_positive_degree() const { return regularity == Regularity::regular && k >= 1; }
  bool connected() const { return components.size() == 1; }
  friend bool operator==(const GraphMetrics&, const GraphMetrics&) = default;
};

GraphMetrics metrics(const Graph& graph);

// Vertices grouped by identical closed neighbourhood. Blocks hold labels in
// ascending order and are ordered by their smallest label.
std::vector<std::vector<std::uint64_t>> partner_partition(const Graph& graph);

std::string to_dot(const Graph& graph, const std::string& name);

}  // namespace classgraph
