// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "classgraph/catalog.hpp"
#include "classgraph/kernels.hpp"

using namespace classgraph;
using kernels::Execution;

namespace {

const char* const kGroups[] = {"sym:5", "sym:6", "prod(sym:3,heis:5)", "prod(alt:5,cyc:7)"};

const Group& group(std::int64_t i) {
  static const std::vector<Group> groups = [] {
    std::vector<Group> out;
    for (const auto* d : kGroups) out.push_back(make_group(d));
    return out;
  }();
  return groups[static_cast<std::size_t>(i)];
}

Execution mode(std::int64_t v) { return v ? Execution::parallel : Execution::serial; }

std::vector<std::uint32_t> flat_table(const Group& g) {
  std::vector<std::uint32_t> t;
  t.reserve(g.order() * g.order());
  for (std::uint32_t a = 0; a < g.order(); ++a)
    for (std::uint32_t b = 0; b < g.order(); ++b) t.push_back(g.mul(a, b));
  return t;
}

std::vector<std::vector<std::uint32_t>> right_maps(const Group& g) {
  std::vector<std::vector<std::uint32_t>> right;
  for (const auto s : g.generator_indices()) {
    std::vector<std::uint32_t> row(g.order());
    for (std::uint32_t x = 0; x < g.order(); ++x) row[x] = g.mul(x, s);
    right.push_back(std::move(row));
  }
  return right;
}

void label(benchmark::State& state) {
  state.SetLabel(std::string(kGroups[state.range(0)]) + (state.range(1) ? " parallel" : " serial"));
}

void BM_CentralizerSets(benchmark::State& state) {
  const auto& g = group(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::centralizer_sets(g, mode(state.range(1))));
  label(state);
}

void BM_CommutingPairs(benchmark::State& state) {
  const auto& g = group(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::commuting_pairs(g, mode(state.range(1))));
  label(state);
}

void BM_Associativity(benchmark::State& state) {
  const auto& g = group(state.range(0));
  const auto table = flat_table(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::find_associativity_violation(table, g.order(), mode(state.range(1))));
  label(state);
}

void BM_MultiplicationTable(benchmark::State& state) {
  const auto& g = group(state.range(0));
  const auto right = right_maps(g);
  const auto tree = kernels::spanning_tree(right, g.order());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiplication_table(right, tree, mode(state.range(1))));
  label(state);
}

}  // namespace

BENCHMARK(BM_CentralizerSets)->ArgsProduct({{0, 1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommutingPairs)->ArgsProduct({{0, 1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Associativity)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplicationTable)->ArgsProduct({{0, 1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
