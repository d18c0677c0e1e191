#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ltft/atom.hpp"
#include "ltft/error.hpp"
#include "ltft/lds.hpp"
#include "ltft/parallel.hpp"
#include "ltft/params.hpp"
#include "ltft/processing.hpp"
#include "ltft/transform.hpp"

using namespace ltft;

namespace {

DigitalSignal random_signal(std::size_t m, double rate, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<cplx> x(m);
  for (cplx& v : x) v = {g(rng), g(rng)};
  return DigitalSignal(x, rate);
}

double sampled_norm(const SparseAtom& atom, double rate) {
  double e = 0.0;
  for (const cplx& v : atom.values) e += std::norm(v);
  return std::sqrt(e / rate);
}

DigitalSignal embed(const SparseAtom& atom, std::size_t m, double rate) {
  DigitalSignal s = DigitalSignal::zeros(m, rate);
  for (std::size_t i = 0; i < atom.values.size(); ++i) s[atom.first + i] = atom.values[i];
  return s;
}

SampleSet single(double a, double b, double c, const PhaseSpaceBox& box) {
  SampleSet s;
  s.points = {{a, b, c}};
  s.box = box;
  return s;
}

}  // namespace

TEST_CASE("parameters") {
  const LtftParams p = LtftParams::from_rate(100.0);
  CHECK(p.b0 == doctest::Approx(10.0));
  CHECK(p.b1 == doctest::Approx(40.0));
  CHECK(atom_support_length(p, 5.0) == doctest::Approx(0.6));
  CHECK(atom_support_length(p, 20.0) == doctest::Approx(0.3));
  CHECK(atom_support_length(p, 80.0) == doctest::Approx(0.15));
  CHECK(band_of(p, 10.0) == Band::cwt);
  CHECK(band_of(p, 40.0) == Band::high);
  CHECK(band_of(p, 9.999) == Band::low);
  CHECK(atom_modulation(p, 5.0, 0.5) == doctest::Approx(10.0));
  CHECK(atom_modulation(p, 20.0, 0.5) == doctest::Approx(30.0));
  CHECK(atom_modulation(p, 80.0, 0.5) == doctest::Approx(100.0));
  CHECK_THROWS_AS(atom_support_length(p, -1.0), Error);
  CHECK_THROWS_AS(LtftParams::from_rate(100.0, 0.4, 0.1), Error);
  LtftParams bad = p;
  bad.gamma = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("sampled atom norm") {
  const double rate = 256.0;
  const std::size_t m = 512;
  const LtftParams p = LtftParams::from_rate(rate, 1.0 / 32.0, 0.25);
  for (double b : {2.0, 5.0, 8.0, 20.0, 64.0, 100.0, 128.0}) {
    for (double c : {0.0, 0.37, 1.0}) {
      CHECK(sampled_norm(ltft_atom_time(p, 0.013, b, c, m, rate), rate) ==
            doctest::Approx(1.0).epsilon(0.02));
    }
  }
  // Coarse sampling relative to b1.
  const std::array<std::pair<double, double>, 3> cases = {{{4.0, 0.10}, {8.0, 0.04}, {16.0, 0.02}}};
  for (auto [ratio, tol] : cases) {
    LtftParams q;
    q.b1 = rate / ratio;
    q.b0 = q.b1 / 4.0;
    for (double a : {0.0, 0.0031, 0.4}) {
      CHECK(std::abs(sampled_norm(ltft_atom_time(q, a, q.b1, 0.5, m, rate), rate) - 1.0) <= tol);
    }
  }
}

TEST_CASE("atom oscillations and placement") {
  const double rate = 512.0;
  const std::size_t m = 1024;
  const LtftParams p = LtftParams::from_rate(rate);
  const double b = 100.0;
  CHECK(atom_modulation(p, b, 0.0) * atom_support_length(p, b) == doctest::Approx(p.gamma));

  const SparseAtom atom = ltft_atom_time(p, 0.0, b, 0.0, m, rate);
  int changes = 0;
  for (std::size_t i = 1; i < atom.values.size(); ++i) {
    if ((atom.values[i].real() > 0) != (atom.values[i - 1].real() > 0)) ++changes;
  }
  CHECK(changes >= 2 * static_cast<int>(p.gamma) - 1);
  CHECK(changes <= 2 * static_cast<int>(p.gamma) + 1);

  const std::size_t len = static_cast<std::size_t>(std::round(rate * atom_support_length(p, b)));
  CHECK(atom.values.size() + 1 >= len);
  CHECK(atom.values.size() <= len + 1);

  // Grid-aligned shifts reproduce the same samples.
  const SparseAtom moved = ltft_atom_time(p, 0.25, b, 0.3, m, rate);
  const SparseAtom base = ltft_atom_time(p, 0.0, b, 0.3, m, rate);
  CHECK(moved.first == base.first + 128);
  CHECK(moved.values == base.values);

  CHECK(ltft_atom_time(p, 5.0, b, 0.3, m, rate).empty());
}

TEST_CASE("atom spectrum") {
  const double rate = 512.0;
  const std::size_t m = 1024;
  const LtftParams p = LtftParams::from_rate(rate);
  const double bin = rate / m;
  std::vector<double> freqs;
  for (std::size_t k = 0; k < m; ++k) freqs.push_back(k * bin - rate / 4);
  for (auto [b, c] : {std::pair{30.0, 0.5}, std::pair{100.0, 0.0}, std::pair{100.0, 0.8},
                      std::pair{180.0, 0.2}}) {
    const std::vector<cplx> spec = ltft_atom_freq(p, b, c, freqs);
    std::size_t best = 0;
    double energy = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      if (std::abs(spec[k]) > std::abs(spec[best])) best = k;
      energy += std::norm(spec[k]) * bin;
    }
    CHECK(std::abs(freqs[best] - atom_modulation(p, b, c)) <= bin);
    const double time_energy = std::pow(sampled_norm(ltft_atom_time(p, 0.0, b, c, m, rate), rate), 2);
    CHECK(energy == doctest::Approx(time_energy).epsilon(0.01));
  }
  const std::vector<cplx> far = ltft_atom_freq(p, 100.0, 0.0, {-200.0});
  CHECK(std::abs(far[0]) < 1e-6);
}

TEST_CASE("analysis examples") {
  const double rate = 256.0;
  const std::size_t m = 512;
  const LtftParams p = LtftParams::from_rate(rate);
  const PhaseSpaceBox box = PhaseSpaceBox::for_signal(m, rate);
  const SampleSet samples = make_samples(box, 300, Generator::hammersley);

  const CoefficientVector zero = analyze(DigitalSignal::zeros(m, rate), samples, p);
  for (const cplx& v : zero.values) CHECK(v == cplx{});
  CHECK(zero.weight == doctest::Approx(samples.weight()));

  for (auto [b, c] : {std::pair{10.0, 0.2}, std::pair{50.0, 0.7}, std::pair{150.0, 1.0}}) {
    const DigitalSignal s = embed(ltft_atom_time(p, 0.1, b, c, m, rate), m, rate);
    const CoefficientVector self = analyze(s, single(0.1, b, c, box), p);
    CHECK(std::abs(self.values[0]) == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(self.values[0].imag()) < 1e-12);
  }

  const CoefficientVector outside = analyze(random_signal(m, rate, 1), single(9.0, 50.0, 0.5, box), p);
  CHECK(outside.values[0] == cplx{});
}

TEST_CASE("analysis is linear and translation covariant") {
  const double rate = 256.0;
  const std::size_t m = 512;
  const LtftParams p = LtftParams::from_rate(rate);
  const PhaseSpaceBox box = PhaseSpaceBox::for_signal(m, rate);
  const SampleSet samples = make_samples(box, 500, Generator::halton);
  const DigitalSignal x = random_signal(m, rate, 2);
  const DigitalSignal y = random_signal(m, rate, 3);
  const cplx alpha{0.7, -1.3};
  const cplx beta{-2.1, 0.4};
  DigitalSignal mix = DigitalSignal::zeros(m, rate);
  for (std::size_t j = 0; j < m; ++j) mix[j] = alpha * x[j] + beta * y[j];
  const CoefficientVector fx = analyze(x, samples, p);
  const CoefficientVector fy = analyze(y, samples, p);
  const CoefficientVector fm = analyze(mix, samples, p);
  double err = 0.0;
  double scale = 0.0;
  for (std::size_t n = 0; n < samples.size(); ++n) {
    err = std::max(err, std::abs(fm.values[n] - (alpha * fx.values[n] + beta * fy.values[n])));
    scale = std::max(scale, std::abs(fm.values[n]));
  }
  CHECK(err <= 1e-12 * scale);

  const std::size_t shift = 32;
  DigitalSignal moved = DigitalSignal::zeros(m, rate);
  for (std::size_t j = shift; j < m; ++j) moved[j] = x[j - shift];
  SampleSet pts;
  pts.box = box;
  SampleSet pts_moved = pts;
  for (double a : {-0.25, 0.0, 0.125, 0.375}) {
    for (auto [b, c] : {std::pair{12.0, 0.1}, std::pair{60.0, 0.5}, std::pair{170.0, 0.9}}) {
      pts.points.push_back({a, b, c});
      pts_moved.points.push_back({a + shift / rate, b, c});
    }
  }
  const CoefficientVector f0 = analyze(x, pts, p);
  const CoefficientVector f1 = analyze(moved, pts_moved, p);
  CHECK(f0.values == f1.values);
}

TEST_CASE("synthesis examples and adjointness") {
  const double rate = 256.0;
  const std::size_t m = 512;
  const LtftParams p = LtftParams::from_rate(rate);
  const PhaseSpaceBox box = PhaseSpaceBox::for_signal(m, rate);
  const SampleSet samples = make_samples(box, 700, Generator::hammersley);

  CoefficientVector zeros{std::vector<cplx>(samples.size()), samples.weight()};
  const DigitalSignal silent = synthesize(zeros, samples, p, m, rate);
  for (const cplx& v : silent.samples()) CHECK(v == cplx{});

  const SampleSet one = single(0.2, 70.0, 0.4, box);
  const CoefficientVector unit{{cplx{1.0, 0.0}}, one.weight()};
  const DigitalSignal s1 = synthesize(unit, one, p, m, rate);
  const DigitalSignal ref = embed(ltft_atom_time(p, 0.2, 70.0, 0.4, m, rate), m, rate);
  for (std::size_t j = 0; j < m; ++j) CHECK(std::abs(s1[j] - box.volume() * ref[j]) < 1e-12);

  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  CoefficientVector f{std::vector<cplx>(samples.size()), samples.weight()};
  CoefficientVector h{std::vector<cplx>(samples.size()), samples.weight()};
  for (std::size_t n = 0; n < samples.size(); ++n) {
    f.values[n] = {g(rng), g(rng)};
    h.values[n] = {g(rng), g(rng)};
  }
  const cplx alpha{1.5, 0.5};
  const cplx beta{-0.3, 2.0};
  CoefficientVector mix{std::vector<cplx>(samples.size()), samples.weight()};
  for (std::size_t n = 0; n < samples.size(); ++n) mix.values[n] = alpha * f.values[n] + beta * h.values[n];
  const DigitalSignal sf = synthesize(f, samples, p, m, rate);
  const DigitalSignal sh = synthesize(h, samples, p, m, rate);
  const DigitalSignal sm = synthesize(mix, samples, p, m, rate);
  double err = 0.0;
  double scale = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    err = std::max(err, std::abs(sm[j] - (alpha * sf[j] + beta * sh[j])));
    scale = std::max(scale, std::abs(sm[j]));
  }
  CHECK(err <= 1e-12 * scale);

  const DigitalSignal s = random_signal(m, rate, 6);
  const CoefficientVector an = analyze(s, samples, p);
  const cplx lhs = inner_product(sf, s);
  cplx rhs{};
  for (std::size_t n = 0; n < samples.size(); ++n) rhs += f.values[n] * std::conj(an.values[n]);
  rhs *= samples.weight();
  CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
}

TEST_CASE("results do not depend on the thread count") {
  const double rate = 256.0;
  const std::size_t m = 2048;
  const LtftParams p = LtftParams::from_rate(rate);
  const PhaseSpaceBox box = PhaseSpaceBox::for_signal(m, rate);
  const SampleSet samples = make_samples(box, 4000, Generator::mc, 11);
  const DigitalSignal s = random_signal(m, rate, 7);
  set_thread_count(1);
  const CoefficientVector a1 = analyze(s, samples, p);
  const DigitalSignal y1 = synthesize(a1, samples, p, m, rate);
  set_thread_count(7);
  const CoefficientVector a7 = analyze(s, samples, p);
  const DigitalSignal y7 = synthesize(a7, samples, p, m, rate);
  set_thread_count(0);
  CHECK(a1.values == a7.values);
  CHECK(y1.samples() == y7.samples());
}

TEST_CASE("branch continuity") {
  const double rate = 256.0;
  const std::size_t m = 512;
  const LtftParams p = LtftParams::from_rate(rate);
  const PhaseSpaceBox box = PhaseSpaceBox::for_signal(m, rate);
  const DigitalSignal s = random_signal(m, rate, 8);
  for (double edge : {p.b0, p.b1}) {
    double prev = 1e300;
    for (double delta : {1e-3, 1e-4, 1e-5, 1e-6}) {
      SampleSet pts;
      pts.box = box;
      for (double c : {0.0, 0.5, 1.0}) {
        pts.points.push_back({0.05, edge - delta, c});
        pts.points.push_back({0.05, edge + delta, c});
      }
      const CoefficientVector f = analyze(s, pts, p);
      double diff = 0.0;
      for (std::size_t i = 0; i < f.size(); i += 2) diff = std::max(diff, std::abs(f.values[i] - f.values[i + 1]));
      CHECK(diff < prev);
      prev = diff;
    }
    CHECK(prev < 1e-4 * s.norm());
  }
}
