#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ltft/cli/experiments.hpp"
#include "ltft/error.hpp"
#include "ltft/processing.hpp"

using namespace ltft;

namespace {

RealSignal tones(std::size_t m, double rate, const std::vector<double>& freqs) {
  RealSignal s;
  s.sample_rate = rate;
  for (std::size_t j = 0; j < m; ++j) {
    const double t = (static_cast<double>(j) - 0.5 * static_cast<double>(m)) / rate;
    double v = 0.0;
    for (std::size_t i = 0; i < freqs.size(); ++i) v += std::cos(2.0 * std::numbers::pi * freqs[i] * t + 0.4 * i);
    s.samples.push_back(v);
  }
  return s;
}

std::vector<double> power_spectrum(const RealSignal& s) {
  std::vector<cplx> x(s.samples.begin(), s.samples.end());
  const Spectrum spec = dft(DigitalSignal(x, s.sample_rate));
  std::vector<double> p;
  for (std::size_t k = 0; k <= s.size() / 2; ++k) p.push_back(std::norm(spec[k]));
  return p;
}

// Frequency of the largest bin with frequency in [lo, hi].
double peak_frequency(const RealSignal& s, double lo, double hi) {
  const std::vector<double> p = power_spectrum(s);
  const double bin = s.sample_rate / static_cast<double>(s.size());
  std::size_t best = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double f = bin * static_cast<double>(k);
    if (f >= lo && f <= hi && (best == 0 || p[k] > p[best])) best = k;
  }
  return bin * static_cast<double>(best);
}

double snr_db(const RealSignal& estimate, const RealSignal& clean) {
  double e = 0.0;
  double s = 0.0;
  for (std::size_t j = 0; j < clean.size(); ++j) {
    e += std::pow(estimate.samples[j] - clean.samples[j], 2);
    s += clean.samples[j] * clean.samples[j];
  }
  return 10.0 * std::log10(s / e);
}

}  // namespace

TEST_CASE("coefficient rules") {
  CHECK(soft_threshold({3.0, 4.0}, 0.0) == cplx(3.0, 4.0));
  CHECK(soft_threshold({3.0, 4.0}, 5.0) == cplx{});
  CHECK(soft_threshold({0.3, 0.4}, 1.0) == cplx{});
  const cplx shrunk = soft_threshold({3.0, 4.0}, 1.0);
  CHECK(shrunk.real() == doctest::Approx(2.4));
  CHECK(shrunk.imag() == doctest::Approx(3.2));
  CHECK(soft_threshold({}, 0.0) == cplx{});

  CHECK(vocoder_phase_rule({1.0, 0.0}, 3) == cplx(1.0, 0.0));
  const cplx flipped = vocoder_phase_rule({0.0, 1.0}, 2);
  CHECK(flipped.real() == doctest::Approx(-1.0));
  CHECK(std::abs(flipped.imag()) < 1e-15);
  CHECK(vocoder_phase_rule({}, 4) == cplx{});
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (int i = 0; i < 100; ++i) {
    const cplx z{g(rng), g(rng)};
    CHECK(vocoder_phase_rule(z, 1) == z);
    for (int d : {2, 3, 7}) CHECK(std::abs(vocoder_phase_rule(z, d)) == doctest::Approx(std::abs(z)).epsilon(1e-15));
  }

  const CoefficientVector c{{{1.0, 2.0}, {-3.0, 0.5}}, 0.25};
  const CoefficientVector same = pointwise_nonlinearity(c, soft_threshold_rule(0.0));
  CHECK(same.values == c.values);
  CHECK(same.weight == 0.25);
}

TEST_CASE("multiplier examples") {
  const PhaseSpaceBox box = PhaseSpaceBox::for_signal(64, 32.0);
  const SampleSet samples = make_samples(box, 50, Generator::halton);
  CoefficientVector c{std::vector<cplx>(samples.size()), samples.weight()};
  for (std::size_t n = 0; n < c.size(); ++n) c.values[n] = {static_cast<double>(n), 1.0};
  CHECK(multiplier_apply(c, samples, [](double, double, double) { return cplx{1.0, 0.0}; }).values == c.values);
  for (const cplx& v : multiplier_apply(c, samples, [](double, double, double) { return cplx{}; }).values)
    CHECK(v == cplx{});
  const CoefficientVector by_b = multiplier_apply(c, samples, [](double, double b, double) { return cplx{b, 0.0}; });
  for (std::size_t n = 0; n < c.size(); ++n) CHECK(by_b.values[n] == c.values[n] * samples.points[n].b);
}

TEST_CASE("sample construction") {
  const PhaseSpaceBox box = PhaseSpaceBox::for_signal(128, 64.0);
  CHECK(sample_count(16.0, 1024) == 16384);
  CHECK(sample_count(1.5, 3) == 5);
  CHECK(sample_count(0.1, 1024) == 103);
  CHECK_THROWS_AS(sample_count(1e7, 1 << 20), Error);
  for (Generator g : {Generator::halton, Generator::hammersley, Generator::mc}) {
    const SampleSet s = make_samples(box, 200, g, 5);
    CHECK(s.size() == 200);
    CHECK(s.generator == g);
    for (const PhasePoint& p : s.points) CHECK(box.contains(p.a, p.b, p.c));
  }
  CHECK_THROWS_AS(make_samples(box, 10, Generator::regular), Error);
}

TEST_CASE("low-pass multiplier") {
  const std::size_t m = 2048;
  const double rate = 2048.0;
  PipelineConfig cfg;
  cfg.params = LtftParams::from_rate(rate);
  RealSignal input = tones(m, rate, {0.05 * rate, 0.35 * rate});
  cli::apply_edge_taper(input, cfg.params);
  const double cut = cfg.params.b0;
  const DigitalSignal out = process(to_analytic(input), cfg, [&](const CoefficientVector& c, const SampleSet& s) {
    return multiplier_apply(c, s, [&](double, double b, double) { return b < cut ? cplx{1.0, 0.0} : cplx{}; });
  });
  const RealSignal y = from_analytic(out);
  const std::vector<double> pin = power_spectrum(input);
  const std::vector<double> pout = power_spectrum(y);
  const double bin = rate / m;
  // Atoms below the cut reach at most 2 b0 plus one main-lobe half-width.
  const double stop = 2.0 * cut + cfg.params.window->bandwidth() * cut / cfg.params.gamma;
  double in_stop = 0.0;
  double out_stop = 0.0;
  for (std::size_t k = 0; k < pin.size(); ++k) {
    if (bin * k < stop + 0.02 * rate) continue;
    in_stop += pin[k];
    out_stop += pout[k];
  }
  CHECK(10.0 * std::log10(in_stop / out_stop) >= 40.0);
  // The pass tone survives.
  CHECK(peak_frequency(y, 0.0, rate / 2) == doctest::Approx(0.05 * rate).epsilon(0.01));
}

TEST_CASE("soft-threshold denoising") {
  const std::size_t m = 2048;
  const double rate = 2048.0;
  PipelineConfig cfg;
  cfg.params = LtftParams::from_rate(rate);
  RealSignal clean = tones(m, rate, {0.12 * rate});
  cli::apply_edge_taper(clean, cfg.params);
  double power = 0.0;
  for (double v : clean.samples) power += v * v / static_cast<double>(m);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, std::sqrt(power));
    RealSignal noisy = clean;
    for (double& v : noisy.samples) v += g(rng);
    const double input_snr = snr_db(noisy, clean);
    CHECK(std::abs(input_snr) < 0.5);

    const DigitalSignal analytic = to_analytic(noisy);
    double largest = 0.0;
    process(analytic, cfg, [&](const CoefficientVector& c, const SampleSet&) {
      for (const cplx& z : c.values) largest = std::max(largest, std::abs(z));
      return c;
    });
    double best = -1e9;
    for (int i = 1; i <= 12; ++i) {
      const double lambda = 0.025 * i * largest;
      const RealSignal y = from_analytic(process(analytic, cfg, [&](const CoefficientVector& c, const SampleSet&) {
        return pointwise_nonlinearity(c, soft_threshold_rule(lambda));
      }));
      best = std::max(best, snr_db(y, clean));
    }
    CHECK(best - input_snr >= 5.0);
  }
}

TEST_CASE("reconstruction pipeline") {
  const std::size_t m = 1024;
  const double rate = 1024.0;
  PipelineConfig cfg;
  cfg.params = LtftParams::from_rate(rate);
  cfg.redundancy = 16;
  RealSignal s = tones(m, rate, {0.15 * rate});
  cli::apply_edge_taper(s, cfg.params);
  CHECK(relative_l2_error(reconstruct(s, cfg).samples, s.samples) <= 0.1);

  RealSignal zero;
  zero.sample_rate = rate;
  zero.samples.assign(m, 0.0);
  for (double v : reconstruct(zero, cfg).samples) CHECK(v == 0.0);

  cfg.sequence = Generator::mc;
  cfg.seed = 9;
  CHECK(reconstruct(s, cfg).samples == reconstruct(s, cfg).samples);
}

TEST_CASE("phase vocoder") {
  const std::size_t m = 1024;
  const double rate = 1024.0;
  VocoderJob job;
  job.params = LtftParams::from_rate(rate);
  CHECK(job.effective_redundancy() == 4.0);
  job.dilation = 3;
  CHECK(job.effective_redundancy() == 12.0);
  CHECK(sample_count(job.effective_redundancy(), m) == 12 * m);

  RealSignal tone = tones(m, rate, {0.2 * rate});
  cli::apply_edge_taper(tone, job.params);

  SUBCASE("identity dilation matches reconstruction") {
    job.dilation = 1;
    PipelineConfig cfg;
    cfg.params = job.params;
    cfg.redundancy = job.effective_redundancy();
    const RealSignal v = phase_vocoder(tone, job);
    const RealSignal r = reconstruct(tone, cfg);
    CHECK(std::abs(relative_l2_error(v.samples, tone.samples) - relative_l2_error(r.samples, tone.samples)) <= 1e-10);
  }

  SUBCASE("dilated tone keeps its frequency") {
    for (int d : {2, 3}) {
      job.dilation = d;
      const RealSignal y = phase_vocoder(tone, job);
      CHECK(y.size() == d * m);
      CHECK(y.sample_rate == rate);
      CHECK(peak_frequency(y, 0.0, rate / 2) == doctest::Approx(0.2 * rate).epsilon(0.01));
    }
  }

  SUBCASE("two tones") {
    RealSignal pair = tones(m, rate, {0.15 * rate, 0.35 * rate});
    cli::apply_edge_taper(pair, job.params);
    for (int d : {2, 3}) {
      job.dilation = d;
      const RealSignal y = phase_vocoder(pair, job);
      CHECK(peak_frequency(y, 0.1 * rate, 0.25 * rate) == doctest::Approx(0.15 * rate).epsilon(0.01));
      CHECK(peak_frequency(y, 0.28 * rate, 0.45 * rate) == doctest::Approx(0.35 * rate).epsilon(0.01));
    }
  }

  SUBCASE("zero input and errors") {
    RealSignal zero;
    zero.sample_rate = rate;
    zero.samples.assign(m, 0.0);
    job.dilation = 2;
    const RealSignal y = phase_vocoder(zero, job);
    CHECK(y.size() == 2 * m);
    for (double v : y.samples) CHECK(v == 0.0);
    job.dilation = 0;
    CHECK_THROWS_AS(phase_vocoder(zero, job), Error);
  }

  SUBCASE("deterministic with a fixed seed") {
    job.dilation = 2;
    job.sequence = Generator::mc;
    job.seed = 77;
    CHECK(phase_vocoder(tone, job).samples == phase_vocoder(tone, job).samples);
  }
}

TEST_CASE("quasi-random beats random samples at N = 4 M") {
  const std::size_t m = 1024;
  const double rate = 16000.0;
  PipelineConfig cfg;
  cfg.params = LtftParams::from_rate(rate);
  const RealSignal s = cli::test_signal(m, rate, cfg.params);
  VocoderJob job;
  job.params = cfg.params;
  const double qmc = relative_l2_error(phase_vocoder(s, job).samples, s.samples);
  double mc = 0.0;
  job.sequence = Generator::mc;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    job.seed = seed;
    mc += relative_l2_error(phase_vocoder(s, job).samples, s.samples) / 10.0;
  }
  CHECK(qmc <= mc);
}
