#include <benchmark/benchmark.h>

#include "locsys/char_var.hpp"
#include "locsys/geometry.hpp"

namespace {

// Grid arrangement: four verticals, three horizontals, four diagonals.
std::vector<locsys::Line> grid() {
  using locsys::Line;
  using locsys::Rational;
  std::vector<Line> lines;
  for (int x : {140, 180, 220, 260}) lines.push_back(Line::make(1, 0, -x));
  for (int y : {45, 75, 105}) lines.push_back(Line::make(0, 1, -y));
  lines.push_back(Line::make(Rational(3, 4), -1, -60));
  lines.push_back(Line::make(Rational(3, 4), -1, -90));
  lines.push_back(Line::make(Rational(3, 4), 1, -210));
  lines.push_back(Line::make(Rational(3, 4), 1, -240));
  return lines;
}

void BM_ChambersSerial(benchmark::State& state) {
  const auto lines = grid();
  for (auto _ : state) benchmark::DoNotOptimize(locsys::chambers_serial(lines));
}

void BM_ChambersParallel(benchmark::State& state) {
  const auto lines = grid();
  for (auto _ : state) benchmark::DoNotOptimize(locsys::chambers(lines));
}

void BM_ScanSerial(benchmark::State& state) {
  const auto b3 = locsys::deleted_b3();
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(locsys::torsion_scan_serial(b3.arrangement, order));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto b3 = locsys::deleted_b3();
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(locsys::torsion_scan(b3.arrangement, order));
}

}  // namespace

BENCHMARK(BM_ChambersSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChambersParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
