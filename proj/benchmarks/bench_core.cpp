#include <benchmark/benchmark.h>

#include <random>

#include "quasimod/axioms.hpp"
#include "quasimod/builders.hpp"
#include "quasimod/graph.hpp"
#include "quasimod/luxemburg.hpp"
#include "quasimod/topology.hpp"
#include "quasimod/transforms.hpp"

namespace {

using namespace quasimod;

ScaleGrid geometric_grid(std::size_t m) {
  std::vector<double> s;
  for (std::size_t k = 0; k < m; ++k) s.push_back(0.25 * std::pow(1.5, static_cast<double>(k)));
  return ScaleGrid(s);
}

/// Shortest-path closure of random weights on n points.
DistanceMatrix random_quasi_metric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> w(0.1, 3.0);
  DistanceMatrix d(PointSet::numbered(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) d(x, y) = x == y ? ExtValue(0) : ExtValue(w(rng));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (d(x, k) + d(k, y) < d(x, y)) d(x, y) = d(x, k) + d(k, y);
  return d;
}

DirectedGraph random_graph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && u(rng) < 0.3) edges.push_back({x, y, 1.0, 0.1 + 4 * u(rng)});
  return DirectedGraph(PointSet::numbered(n, "v"), std::move(edges));
}

void BM_CheckAxioms(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ScaleGrid grid = geometric_grid(static_cast<std::size_t>(state.range(1)));
  const Gauge g = make_ratio(random_quasi_metric(n, 1), TConorm(TConorm::Kind::ProbabilisticSum)).tabulate(grid);
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(g, grid));
}
BENCHMARK(BM_CheckAxioms)->Args({8, 16})->Args({16, 16})->Args({32, 16})->Args({8, 64});

void BM_VerifyJoinEquality(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ScaleGrid grid = geometric_grid(4);
  const Gauge g = make_ratio(random_quasi_metric(n, 2), TConorm(TConorm::Kind::Max)).tabulate(grid);
  for (auto _ : state) benchmark::DoNotOptimize(verify_join_equality(g, grid));
}
BENCHMARK(BM_VerifyJoinEquality)->DenseRange(4, 12, 4);

void BM_LuxemburgDistance(benchmark::State& state) {
  const DistanceMatrix d = random_quasi_metric(16, 3);
  const Gauge g = Gauge::closed_form("d/t", d.points(), std::nullopt,
                                     [d](std::size_t x, std::size_t y, double t) { return ExtValue(d(x, y).value() / t); });
  LuxemburgOptions opt;
  opt.tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg_distance(g, 1, 7, opt));
}
BENCHMARK(BM_LuxemburgDistance)->Arg(6)->Arg(9)->Arg(12);

void BM_LuxemburgMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DistanceMatrix d = random_quasi_metric(n, 4);
  const Gauge g = Gauge::closed_form("d/t", d.points(), std::nullopt,
                                     [d](std::size_t x, std::size_t y, double t) { return ExtValue(d(x, y).value() / t); });
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg_matrix(g));
}
BENCHMARK(BM_LuxemburgMatrix)->Arg(8)->Arg(32);

void BM_ForwardDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DirectedGraph g = random_graph(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(forward_distance(g, 0, n - 1));
}
BENCHMARK(BM_ForwardDistance)->RangeMultiplier(4)->Range(16, 1024);

void BM_ForwardDistances(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DirectedGraph g = random_graph(n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(forward_distances(g));
}
BENCHMARK(BM_ForwardDistances)->Arg(16)->Arg(128);

void BM_ProfileConvolve(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const ScaleGrid grid = geometric_grid(m);
  std::vector<ExtValue> a, b;
  for (std::size_t k = 0; k < m; ++k) {
    a.push_back(ExtValue(1.0 / (2.0 + static_cast<double>(k))));
    b.push_back(ExtValue(0.5 / (1.0 + static_cast<double>(k))));
  }
  const Profile pa(grid, a), pb(grid, b);
  for (auto _ : state) benchmark::DoNotOptimize(profile_convolve(pa, pb, TConorm(TConorm::Kind::BoundedSum)));
}
BENCHMARK(BM_ProfileConvolve)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
