// Desk-scale hot paths: scalar algebra, matrix products, spectral calls
// through the complex embedding, and the full K-frame decision.

#include <benchmark/benchmark.h>

#include "qframes/frames.hpp"
#include "qframes/generators.hpp"
#include "qframes/random.hpp"
#include "qframes/spectral.hpp"

namespace {

using namespace qframes;

void bm_quaternion_multiply(benchmark::State& state) {
  SplitMix64 rng(1);
  // Unit multiplier keeps |q| fixed at 1, so the dependent chain never
  // drifts into overflow or denormal territory.
  Quaternion p = random_quaternion(rng);
  p = p / p.abs();
  Quaternion q = random_quaternion(rng);
  q = q / q.abs();
  for (auto _ : state) {
    q = p * q;
    // Pin one component rather than the aggregate; the whole-struct barrier
    // costs two orders of magnitude more than the multiply being measured.
    benchmark::DoNotOptimize(q.a0);
  }
}
BENCHMARK(bm_quaternion_multiply);

void bm_matrix_product(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(2);
  const QMatrix a = random_matrix(rng, n, n);
  const QMatrix b = random_matrix(rng, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(bm_matrix_product)->Arg(4)->Arg(8)->Arg(16);

void bm_herm_eigvals(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(3);
  const QMatrix a = random_matrix(rng, n, n);
  const QMatrix h = a * adjoint(a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(herm_eigvals(h));
  }
}
BENCHMARK(bm_herm_eigvals)->Arg(4)->Arg(8)->Arg(16);

void bm_pinv(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(4);
  const QMatrix m = random_matrix(rng, n, n + n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pinv(m));
  }
}
BENCHMARK(bm_pinv)->Arg(4)->Arg(8)->Arg(16);

void bm_frame_bounds(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  SplitMix64 rng(5);
  const FrameFamily fam = random_frame(rng, dim, 3 * dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frame_bounds(fam));
  }
}
BENCHMARK(bm_frame_bounds)->Arg(4)->Arg(8);

void bm_kframe_check(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  SplitMix64 rng(6);
  const KFrameInstance inst = kframe_positive(rng, dim, 2 * dim, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kframe_check(inst.fam, inst.k));
  }
}
BENCHMARK(bm_kframe_check)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
