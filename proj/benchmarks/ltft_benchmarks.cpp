#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "ltft/frame_op.hpp"
#include "ltft/lds.hpp"
#include "ltft/processing.hpp"
#include "ltft/transform.hpp"

namespace {

ltft::DigitalSignal chirp(std::size_t m, double rate) {
  ltft::DigitalSignal s = ltft::DigitalSignal::zeros(m, rate);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = s.time(j);
    const double phase = 2.0 * std::numbers::pi * (0.1 * rate * t + 0.05 * rate * t * t);
    s[j] = std::polar(1.0, phase);
  }
  return s;
}

void BM_Analyze(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const double rate = 16000.0;
  const ltft::LtftParams params = ltft::LtftParams::from_rate(rate);
  const ltft::DigitalSignal s = chirp(m, rate);
  const ltft::SampleSet samples =
      ltft::make_samples(ltft::PhaseSpaceBox::for_signal(m, rate), 4 * m, ltft::Generator::hammersley);
  for (auto _ : state) benchmark::DoNotOptimize(ltft::analyze(s, samples, params));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * samples.size()));
}
BENCHMARK(BM_Analyze)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_Synthesize(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const double rate = 16000.0;
  const ltft::LtftParams params = ltft::LtftParams::from_rate(rate);
  const ltft::DigitalSignal s = chirp(m, rate);
  const ltft::SampleSet samples =
      ltft::make_samples(ltft::PhaseSpaceBox::for_signal(m, rate), 4 * m, ltft::Generator::hammersley);
  const ltft::CoefficientVector coeffs = ltft::analyze(s, samples, params);
  for (auto _ : state) benchmark::DoNotOptimize(ltft::synthesize(coeffs, samples, params, s));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * samples.size()));
}
BENCHMARK(BM_Synthesize)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_FrameDiagonal(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const double rate = 16000.0;
  const ltft::LtftParams params = ltft::LtftParams::from_rate(rate);
  for (auto _ : state) benchmark::DoNotOptimize(ltft::frame_diagonal(params, rate, m));
}
BENCHMARK(BM_FrameDiagonal)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

void BM_StarDiscrepancy(benchmark::State& state) {
  const ltft::UnitPointSet pts = ltft::hammersley_set(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ltft::star_discrepancy(pts));
}
BENCHMARK(BM_StarDiscrepancy)->RangeMultiplier(2)->Range(16, 1024)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
