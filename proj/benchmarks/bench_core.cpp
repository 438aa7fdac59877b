#include <benchmark/benchmark.h>
#include <map>

#include "qhopf/parse.hpp"
#include "qhopf/presets.hpp"

using namespace qhopf;

namespace {

const Preset& qsl2(int order) {
  static std::map<int, Preset> cache;
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_preset({PresetId::qsl2, order, 2})).first;
  return it->second;
}

void BM_PresetBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_preset({PresetId::qsl2, static_cast<int>(state.range(0)), 2}));
}
BENCHMARK(BM_PresetBuild)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_TensorMultiply(benchmark::State& state) {
  const QTContext& q = *qsl2(static_cast<int>(state.range(0))).qt;
  for (auto _ : state) benchmark::DoNotOptimize(q.r() * q.r_inv());
}
BENCHMARK(BM_TensorMultiply)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_RSigma(benchmark::State& state) {
  const QTContext& q = *qsl2(3).qt;
  const SubsetIndex sigma = SubsetIndex::full(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(r_sigma(q, sigma));
}
BENCHMARK(BM_RSigma)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_Gate(benchmark::State& state) {
  const QTContext& q = *qsl2(static_cast<int>(state.range(0))).qt;
  const TensorElement a = parse_element("h * (E # F) + h^2 * (H # H^2)", q.algebra(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(drinfeld_gate(q.twisted(), a, q.order() + 2));
}
BENCHMARK(BM_Gate)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_AdjointStability(benchmark::State& state) {
  const QTContext& q = *qsl2(4).qt;
  const GateCertificate c = drinfeld_gate(q.twisted(), parse_element("h * (E # 1)", q.algebra(), 2), 4);
  for (auto _ : state) benchmark::DoNotOptimize(verify_adjoint_stability(q, c));
}
BENCHMARK(BM_AdjointStability)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
