#include <benchmark/benchmark.h>

#include <random>

#include "multinet/connectives.hpp"
#include "multinet/expansion.hpp"
#include "multinet/mstructure.hpp"
#include "multinet/partition.hpp"

using namespace multinet;

namespace {

Partition random_partition(std::mt19937& rng, std::size_t n) {
  std::vector<Block> blocks;
  for (std::size_t k = 0; k < n; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, blocks.size());
    std::size_t b = pick(rng);
    if (b == blocks.size()) blocks.emplace_back();
    blocks[b].emplace_back("e" + std::to_string(k));
  }
  return Partition(std::move(blocks));
}

// ((1 * 2) | 3) * 4 ... alternating, so half the links are pars
Formula alternating(std::size_t leaves) {
  Formula f = Formula::atom(1);
  for (std::size_t k = 2; k <= leaves; ++k) {
    f = k % 2 ? Formula::par(f, Formula::atom(k)) : Formula::tensor(f, Formula::atom(k));
  }
  return f;
}

void BM_Orthogonal(benchmark::State& state) {
  std::mt19937 rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::pair<Partition, Partition>> pairs;
  for (int k = 0; k < 64; ++k) pairs.emplace_back(random_partition(rng, n), random_partition(rng, n));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [p, q] = pairs[k++ % pairs.size()];
    benchmark::DoNotOptimize(orthogonal(p, q));
  }
}
BENCHMARK(BM_Orthogonal)->RangeMultiplier(2)->Range(8, 256);

void BM_Behavior(benchmark::State& state) {
  auto S = formula_structure(alternating(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(behavior(S));
  state.counters["switchings"] = static_cast<double>(switching_count(S));
}
BENCHMARK(BM_Behavior)->DenseRange(4, 16, 4);

ExpansionSite chain_site(std::size_t leaves) {
  auto host = std::make_shared<const MStructure>(formula_structure(alternating(leaves)));
  auto guest = std::make_shared<const MStructure>(formula_structure(alternating(leaves).dual()));
  return ExpansionSite(host, guest, {{VertexId("i1"), VertexId("o1")}});
}

void BM_ExpansionDirect(benchmark::State& state) {
  auto site = chain_site(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expands_direct(site));
}
BENCHMARK(BM_ExpansionDirect)->DenseRange(4, 12, 2);

void BM_ExpansionCharacterized(benchmark::State& state) {
  auto site = chain_site(static_cast<std::size_t>(state.range(0)));
  auto B1 = behavior(site.host());
  auto B2 = behavior(site.guest());
  for (auto _ : state) benchmark::DoNotOptimize(check_expansion(site, B1, B2));
}
BENCHMARK(BM_ExpansionCharacterized)->DenseRange(4, 12, 2);

}  // namespace
BENCHMARK_MAIN();
