#include "classgraph/kernels.hpp"

#include <deque>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace classgraph::kernels {

namespace {

ElementSet centralizer_row(const Group& group, std::uint32_t x) {
  const auto n = group.order();
  ElementSet row(n);
  if (group.is_central(x)) {
    row.set();
    return row;
  }
  for (std::uint32_t h = 0; h < n; ++h)
    if (group.mul(x, h) == group.mul(h, x)) row.set(h);
  return row;
}

bool associative_at(std::span<const std::uint32_t> t, std::size_t n, std::uint32_t a) {
  for (std::size_t b = 0; b < n; ++b) {
    const auto ab = t[a * n + b];
    for (std::size_t c = 0; c < n; ++c)
      if (t[ab * n + c] != t[a * n + t[b * n + c]]) return false;
  }
  return true;
}

std::optional<std::array<std::uint32_t, 3>> first_violation_in_row(std::span<const std::uint32_t> t,
                                                                   std::size_t n, std::uint32_t a) {
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c)
      if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]])
        return std::array<std::uint32_t, 3>{a, static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c)};
  return std::nullopt;
}

}  // namespace

std::vector<ElementSet> centralizer_sets(const Group& group, Execution exec) {
  const auto n = static_cast<std::int64_t>(group.order());
  std::vector<ElementSet> out(group.order());
  if (exec == Execution::serial) {
    for (std::int64_t x = 0; x < n; ++x) out[x] = centralizer_row(group, static_cast<std::uint32_t>(x));
    return out;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t x = 0; x < n; ++x) out[x] = centralizer_row(group, static_cast<std::uint32_t>(x));
  return out;
}

std::optional<std::array<std::uint32_t, 3>> find_associativity_violation(
    std::span<const std::uint32_t> table, std::size_t order, Execution exec) {
  const auto n = static_cast<std::int64_t>(order);
  if (exec == Execution::serial) {
    for (std::int64_t a = 0; a < n; ++a)
      if (!associative_at(table, order, static_cast<std::uint32_t>(a)))
        return first_violation_in_row(table, order, static_cast<std::uint32_t>(a));
    return std::nullopt;
  }
  // Smallest offending row wins so the result matches the serial scan.
  std::int64_t first_bad = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 4) reduction(min : first_bad)
  for (std::int64_t a = 0; a < n; ++a)
    if (a < first_bad && !associative_at(table, order, static_cast<std::uint32_t>(a))) first_bad = a;
  if (first_bad == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return first_violation_in_row(table, order, static_cast<std::uint32_t>(first_bad));
}

SpanningTree spanning_tree(std::span<const std::vector<std::uint32_t>> right, std::size_t order) {
  constexpr auto unseen = std::numeric_limits<std::uint32_t>::max();
  SpanningTree tree;
  tree.parent.assign(order, unseen);
  tree.via.assign(order, unseen);
  tree.sequence.reserve(order);
  std::deque<std::uint32_t> queue{0};
  tree.parent[0] = 0;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (std::uint32_t s = 0; s < right.size(); ++s) {
      const auto y = right[s][x];
      if (tree.parent[y] != unseen) continue;
      tree.parent[y] = x;
      tree.via[y] = s;
      tree.sequence.push_back(y);
      queue.push_back(y);
    }
  }
  return tree;
}

std::vector<std::uint32_t> multiplication_table(std::span<const std::vector<std::uint32_t>> right,
                                                const SpanningTree& tree, Execution exec) {
  const auto n = tree.parent.size();
  std::vector<std::uint32_t> table(n * n);
  auto fill_row = [&](std::size_t x) {
    auto* row = table.data() + x * n;
    row[0] = static_cast<std::uint32_t>(x);
    for (const auto y : tree.sequence) row[y] = right[tree.via[y]][row[tree.parent[y]]];
  };
  const auto rows = static_cast<std::int64_t>(n);
  if (exec == Execution::serial) {
    for (std::int64_t x = 0; x < rows; ++x) fill_row(static_cast<std::size_t>(x));
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 0; x < rows; ++x) fill_row(static_cast<std::size_t>(x));
  }
  return table;
}

std::uint64_t commuting_pairs(const Group& group, Execution exec) {
  const auto n = static_cast<std::int64_t>(group.order());
  std::uint64_t total = 0;
  if (exec == Execution::serial) {
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b)
        total += group.mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)) ==
                 group.mul(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(a));
    return total;
  }
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      total += group.mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)) ==
               group.mul(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(a));
  return total;
}

}  // namespace classgraph::kernels
