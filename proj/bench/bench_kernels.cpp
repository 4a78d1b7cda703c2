#include <benchmark/benchmark.h>

#include "legendrian/corpus.hpp"
#include "legendrian/dga.hpp"
#include "legendrian/invariants.hpp"
#include "legendrian/moves.hpp"

using namespace legendrian;

namespace {

struct Input {
  FrontDiagram simple;
  ComponentMap cm;
  std::vector<Vertex> vertices;
  DGA dga;
};

// A large front: parallel copies of an isotoped trefoil.
const Input& input() {
  static const Input in = [] {
    const FrontDiagram knot = random_isotopy(corpus_front(*find_corpus("trefoil")), 8, 25);
    Input x;
    x.simple = make_simple(n_copy(knot, 2));
    x.cm = trace_components(x.simple);
    x.vertices = vertex_table(x.simple, x.cm);
    x.dga = compute_dga(knot);
    return x;
  }();
  return in;
}

void BM_DisksSerial(benchmark::State& state) {
  const Input& in = input();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all_disks(in.simple, in.cm, in.vertices));
}

void BM_DisksParallel(benchmark::State& state) {
  const Input& in = input();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all_disks_parallel(in.simple, in.cm, in.vertices));
}

void BM_AugmentationsSerial(benchmark::State& state) {
  const Input& in = input();
  for (auto _ : state) benchmark::DoNotOptimize(find_augmentations_serial(in.dga));
}

void BM_AugmentationsParallel(benchmark::State& state) {
  const Input& in = input();
  for (auto _ : state) benchmark::DoNotOptimize(find_augmentations(in.dga));
}

void BM_PolynomialSet(benchmark::State& state) {
  const Input& in = input();
  AugmentationSearch opt;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_set(in.dga, 1, opt));
}

}  // namespace

BENCHMARK(BM_DisksSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DisksParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AugmentationsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AugmentationsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolynomialSet)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
