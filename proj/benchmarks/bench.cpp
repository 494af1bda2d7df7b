#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "origami/engine.hpp"
#include "origami/render.hpp"
#include "origami/rules.hpp"
#include "origami/script.hpp"

using namespace origami;

namespace {

std::string fixture(const char* name) {
  std::ifstream in(std::string(ORIGAMI_FIXTURE_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void BM_RunFixture(benchmark::State& state, const char* name) {
  const script::Script s = script::parse(fixture(name));
  for (auto _ : state) benchmark::DoNotOptimize(script::run(s));
}
BENCHMARK_CAPTURE(BM_RunFixture, squash, "squash.ori");
BENCHMARK_CAPTURE(BM_RunFixture, house, "house.ori");
BENCHMARK_CAPTURE(BM_RunFixture, pleat_crimp, "pleat_crimp_outside.ori");

void BM_Parse(benchmark::State& state) {
  const std::string text = fixture("house.ori");
  for (auto _ : state) benchmark::DoNotOptimize(script::parse(text));
}
BENCHMARK(BM_Parse);

// Repeated halving; k folds stack 2^k layers.
void BM_FoldLayers(benchmark::State& state) {
  AbstractOrigami ao = init_square();
  double wx = 1.0, wy = 1.0;
  for (int k = 0; k < state.range(0); ++k) {
    FoldSpec s;
    if (k % 2 == 0) {
      wx /= 2;
      s.ray = Ray{{wx, 0}, {wx, 1}};
    } else {
      wy /= 2;
      s.ray = Ray{{1, wy}, {0, wy}};
    }
    ao = fold(ao, s);
  }
  FoldSpec last;
  last.ray = Ray{{0.01, 0}, {0.01, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(fold(ao, last));
  state.counters["faces"] = static_cast<double>(ao.faces.size());
}
BENCHMARK(BM_FoldLayers)->DenseRange(1, 6);

void BM_O6(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-2, 2);
  std::vector<std::tuple<Point, Line, Point, Line>> cases;
  while (cases.size() < 256) {
    const Point p{u(rng), u(rng)}, q{u(rng), u(rng)};
    const Line m = line_through({u(rng), u(rng)}, {u(rng), u(rng)});
    const Line n = line_through({u(rng), u(rng)}, {u(rng), u(rng)});
    if (std::abs(m.signed_distance(p)) > 0.05 && std::abs(n.signed_distance(q)) > 0.05) cases.emplace_back(p, m, q, n);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [p, m, q, n] = cases[i++ % cases.size()];
    benchmark::DoNotOptimize(rules::o6(p, m, q, n));
  }
}
BENCHMARK(BM_O6);

void BM_RenderHouse(benchmark::State& state) {
  const AbstractOrigami ao = script::run(script::parse(fixture("house.ori"))).current();
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_svg(ao));
    benchmark::DoNotOptimize(export_3d(pose3d(ao, 0.05)));
  }
}
BENCHMARK(BM_RenderHouse);

}  // namespace

BENCHMARK_MAIN();
