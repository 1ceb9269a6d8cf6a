#include <benchmark/benchmark.h>

#include "kmoduli/binary.hpp"
#include "kmoduli/git.hpp"
#include "kmoduli/nslattice.hpp"
#include "kmoduli/polygon.hpp"

namespace {

using namespace kmoduli;

void bm_quartic_line_decomposition(benchmark::State& state) {
  git_problem p;
  p.n = 2;
  p.d = 4;
  p.e = 1;
  for (auto _ : state) {
    auto dec = wall_chamber_decomposition(p);
    benchmark::DoNotOptimize(dec.walls.size());
  }
}
BENCHMARK(bm_quartic_line_decomposition)->Unit(benchmark::kMillisecond);

void bm_candidate_enumeration(benchmark::State& state) {
  git_problem p;
  p.n = 2;
  p.d = 4;
  p.e = 1;
  for (auto _ : state) {
    auto cands = enumerate_candidates(p);
    benchmark::DoNotOptimize(cands.size());
  }
}
BENCHMARK(bm_candidate_enumeration)->Unit(benchmark::kMillisecond);

void bm_polygon_area(benchmark::State& state) {
  std::vector<point2> pts;
  for (int i = 0; i < 12; ++i)
    pts.push_back({rat(i * i % 17, 3), rat((7 * i + 5) % 13, 2)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(polygon_area(pts));
  }
}
BENCHMARK(bm_polygon_area);

void bm_binary_status(benchmark::State& state) {
  binary_form f8;
  f8.coeffs = {rat(1), rat(0), rat(3), rat(0), rat(0), rat(-2), rat(0), rat(0), rat(1)};
  binary_form f2;
  f2.coeffs = {rat(1), rat(2), rat(1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(binary_pair_status(f8, f2, rat(3, 2)));
  }
}
BENCHMARK(bm_binary_status);

}  // namespace

BENCHMARK_MAIN();
