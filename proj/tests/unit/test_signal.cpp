#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ltft/error.hpp"
#include "ltft/signal.hpp"

using namespace ltft;

namespace {

DigitalSignal random_signal(std::size_t m, double rate, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<cplx> x(m);
  for (cplx& v : x) v = {g(rng), g(rng)};
  return DigitalSignal(x, rate);
}

// Direct O(M^2) evaluation of X_k = (1/L) sum_m x_m exp(-2 pi i k m / M).
std::vector<cplx> naive_dft(const DigitalSignal& s) {
  const std::size_t m = s.size();
  std::vector<cplx> out(m);
  for (std::size_t k = 0; k < m; ++k) {
    cplx acc{};
    for (std::size_t j = 0; j < m; ++j) {
      const double mm = static_cast<double>(j) - static_cast<double>(m / 2);
      const double arg = -2.0 * std::numbers::pi * static_cast<double>(k) * mm / static_cast<double>(m);
      acc += s[j] * cplx(std::cos(arg), std::sin(arg));
    }
    out[k] = acc / s.sample_rate();
  }
  return out;
}

}  // namespace

TEST_CASE("digital signal grid") {
  const DigitalSignal s = DigitalSignal::zeros(8, 4.0);
  CHECK(s.duration() == 2.0);
  CHECK(s.time(0) == -1.0);
  CHECK(s.time(4) == 0.0);
  CHECK(s.time(7) == 0.75);
  CHECK_THROWS_AS(DigitalSignal::zeros(7, 4.0), Error);
  CHECK_THROWS_AS(DigitalSignal::zeros(2, 4.0), Error);
  CHECK_THROWS_AS(DigitalSignal::zeros(8, 0.0), Error);
}

TEST_CASE("dft matches the direct sum and inverts") {
  const DigitalSignal s = random_signal(48, 3.0, 1);
  const Spectrum spec = dft(s);
  const std::vector<cplx> ref = naive_dft(s);
  for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(spec[k] - ref[k]) < 1e-12 * 48);
  CHECK(spec.frequency(1) == doctest::Approx(3.0 / 48));

  const DigitalSignal back = idft(spec);
  CHECK(relative_l2_error(back.samples(), s.samples()) < 1e-12);
  const Spectrum again = dft(idft(spec));
  CHECK(relative_l2_error(again.bins(), spec.bins()) < 1e-12);
}

TEST_CASE("constant and pure-tone spectra") {
  const std::size_t m = 64;
  const double rate = 8.0;
  DigitalSignal c(std::vector<cplx>(m, cplx{2.0, 0.0}), rate);
  const Spectrum cs = dft(c);
  CHECK(std::abs(cs[0] - cplx(2.0 * m / rate, 0.0)) < 1e-12);
  for (std::size_t k = 1; k < m; ++k) CHECK(std::abs(cs[k]) < 1e-12);

  const std::size_t bin = 5;
  DigitalSignal tone = DigitalSignal::zeros(m, rate);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = tone.time(j);
    const double arg = 2.0 * std::numbers::pi * (bin * rate / m) * t;
    tone[j] = {std::cos(arg), std::sin(arg)};
  }
  const Spectrum ts = dft(tone);
  for (std::size_t k = 0; k < m; ++k) {
    if (k == bin) {
      CHECK(std::abs(ts[k]) == doctest::Approx(m / rate));
    } else {
      CHECK(std::abs(ts[k]) < 1e-12);
    }
  }
}

TEST_CASE("analytic signal round trip") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  RealSignal s;
  s.sample_rate = 10.0;
  s.samples.resize(128);
  for (double& v : s.samples) v = g(rng);
  const RealSignal back = from_analytic(to_analytic(s));
  CHECK(relative_l2_error(back.samples, s.samples) < 1e-10);

  RealSignal zero;
  zero.sample_rate = 10.0;
  zero.samples.assign(16, 0.0);
  const DigitalSignal analytic = to_analytic(zero);
  for (const cplx& z : analytic.samples()) CHECK(z == cplx{});
}

TEST_CASE("analytic signal of a cosine is the positive exponential") {
  const std::size_t m = 128;
  const double rate = 16.0;
  const double f = 3.0 * rate / m * 7;  // bin 21
  RealSignal s;
  s.sample_rate = rate;
  for (std::size_t j = 0; j < m; ++j) {
    const double t = (static_cast<double>(j) - m / 2.0) / rate;
    s.samples.push_back(std::cos(2.0 * std::numbers::pi * f * t));
  }
  const DigitalSignal a = to_analytic(s);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = a.time(j);
    const cplx expect = std::polar(1.0, 2.0 * std::numbers::pi * f * t);
    CHECK(std::abs(a[j] - expect) < 1e-12);
  }
  const Spectrum spec = dft(a);
  CHECK(std::abs(spec[21]) == doctest::Approx(m / rate));
}

TEST_CASE("norms and inner product") {
  const DigitalSignal s = random_signal(32, 4.0, 9);
  CHECK(std::sqrt(inner_product(s, s).real()) == doctest::Approx(s.norm()));
  // Parseval with this normalisation: sum |x|^2 / L = sum |X|^2 L / M.
  const Spectrum spec = dft(s);
  double e = 0.0;
  for (const cplx& x : spec.bins()) e += std::norm(x) * spec.bin_width();
  CHECK(e == doctest::Approx(s.norm() * s.norm()));
}
