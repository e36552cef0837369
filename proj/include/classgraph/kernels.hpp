#pragma once

// Enumeration-heavy inner loops, each with a serial reference version and an
// OpenMP version. The serial path is the oracle the parallel one is tested
// against; both must return identical results.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "classgraph/group.hpp"

namespace classgraph::kernels {

enum class Execution { serial, parallel };

// C_G(x) for every element x, indexed by element.
std::vector<ElementSet> centralizer_sets(const Group& group, Execution exec);

// First triple (a, b, c) in lexicographic order with (ab)c != a(bc), if any.
std::optional<std::array<std::uint32_t, 3>> find_associativity_violation(
    std::span<const std::uint32_t> table, std::size_t order, Execution exec);

// A breadth-first spanning tree of the right Cayley graph: every non-identity
// element y equals parent[y] * generator number via[y]. `sequence` lists the
// non-identity elements parents-first.
struct SpanningTree {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> via;
  std::vector<std::uint32_t> sequence;
};

// right[s][x] is the index of x * generator s.
SpanningTree spanning_tree(std::span<const std::vector<std::uint32_t>> right, std::size_t order);

// Full row-major multiplication table from right multiplication maps:
// x * y = (x * parent[y]) * generator via[y].
std::vector<std::uint32_t> multiplication_table(std::span<const std::vector<std::uint32_t>> right,
                                                const SpanningTree& tree, Execution exec);

// Number of ordered commuting pairs (a, b); |G| times the number of classes.
std::uint64_t commuting_pairs(const Group& group, Execution exec);

}  // namespace classgraph::kernels
