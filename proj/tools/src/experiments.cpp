#include "ltft/cli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ltft/error.hpp"
#include "ltft/params.hpp"
#include "ltft/processing.hpp"

namespace ltft::cli {

void apply_edge_taper(RealSignal& signal, const LtftParams& params) {
  const double zero = params.S0() * signal.sample_rate;
  const double ramp = zero;
  const std::size_t m = signal.size();
  for (std::size_t j = 0; j < m; ++j) {
    const double edge = static_cast<double>(std::min(j, m - 1 - j));
    double w = 1.0;
    if (edge < zero) {
      w = 0.0;
    } else if (edge < zero + ramp) {
      w = 0.5 - 0.5 * std::cos(std::numbers::pi * (edge - zero) / ramp);
    }
    signal.samples[j] *= w;
  }
}

RealSignal test_signal(std::size_t size, double rate, const LtftParams& params, std::uint64_t seed) {
  params.validate();
  require(size >= 4 && size % 2 == 0, Errc::invalid_parameter, "signal length must be even and >= 4");
  require(rate > 0.0, Errc::invalid_parameter, "sample rate must be positive");
  require(4.0 * params.S0() * rate < static_cast<double>(size), Errc::invalid_parameter,
          "signal is too short for the edge taper");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const double f_lo = 2.0 * params.b0;
  const double f_hi = params.b1;
  std::vector<double> phase(8);
  for (double& p : phase) p = two_pi * uniform(rng);

  const double duration = static_cast<double>(size) / rate;
  const double width = 0.08 * duration;
  auto chirp = [&](double t, double centre, double f_start, double f_end) {
    const double x = t - centre;
    const double sweep = (f_end - f_start) / (4.0 * width);
    const double envelope = std::exp(-x * x / (2.0 * width * width));
    return 2.0 * envelope * std::cos(two_pi * (0.5 * (f_start + f_end) * x + 0.5 * sweep * x * x));
  };

  RealSignal s;
  s.sample_rate = rate;
  s.samples.resize(size);
  for (std::size_t j = 0; j < size; ++j) {
    const double t = (static_cast<double>(j) - 0.5 * static_cast<double>(size)) / rate;
    double v = 0.0;
    for (int k = 0; k < 8; ++k) {
      const double f = f_lo * std::pow(f_hi / f_lo, k / 7.0);
      v += std::cos(two_pi * f * t + phase[static_cast<std::size_t>(k)]);
    }
    v += chirp(t, -0.2 * duration, 0.05 * rate, 0.15 * rate);
    v += chirp(t, 0.2 * duration, 0.3 * rate, 0.45 * rate);
    s.samples[j] = v;
  }
  double power = 0.0;
  for (double v : s.samples) power += v * v;
  const double noise = 1e-3 * std::sqrt(power / static_cast<double>(size));
  for (double& v : s.samples) v += noise * gauss(rng);
  apply_edge_taper(s, params);
  // Peak amplitude 1/2.
  double peak = 0.0;
  for (double v : s.samples) peak = std::max(peak, std::abs(v));
  for (double& v : s.samples) v *= 0.5 / peak;
  return s;
}

std::vector<ErrorRow> bench_reconstruction(const RealSignal& signal, Generator method,
                                           const std::vector<double>& redundancies,
                                           const LtftParams& params, std::size_t mc_seeds,
                                           std::uint64_t seed) {
  std::vector<ErrorRow> rows;
  PipelineConfig config;
  config.params = params;
  config.sequence = method;
  const std::size_t runs = method == Generator::mc ? mc_seeds : 1;
  require(runs >= 1, Errc::invalid_parameter, "mc needs at least one seed");
  for (double a : redundancies) {
    require(a >= 1.0, Errc::invalid_parameter, "redundancies must be at least 1");
    config.redundancy = a;
    std::vector<double> errors;
    for (std::size_t r = 0; r < runs; ++r) {
      config.seed = seed + r;
      errors.push_back(relative_l2_error(reconstruct(signal, config).samples, signal.samples));
    }
    ErrorRow row;
    row.method = method;
    row.redundancy = a;
    row.n = sample_count(a, signal.size());
    for (double e : errors) row.error += e / static_cast<double>(errors.size());
    if (errors.size() > 1) {
      double var = 0.0;
      for (double e : errors) var += (e - row.error) * (e - row.error);
      row.error_std = std::sqrt(var / static_cast<double>(errors.size() - 1));
    }
    rows.push_back(row);
  }
  return rows;
}

ComplexityCount complexity_count(const SampleSet& samples, const LtftParams& params, double rate) {
  params.validate();
  ComplexityCount out;
  for (const PhasePoint& g : samples.points) {
    out.actual += std::round(rate * atom_support_length(params, g.b));
  }
  const double n = static_cast<double>(samples.size());
  out.predicted = params.gamma * n *
                  (1.0 + std::log(params.b1 / params.b0) + (rate - params.b1) / params.b1);
  return out;
}

double complexity_per_sample_bound(const LtftParams& params, double rate) {
  return params.gamma * (1.0 + std::log(params.b1 / params.b0) + (rate - params.b1) / params.b1) + 1.0;
}

double complexity_deviation_bound(const LtftParams& params, double rate, std::size_t count) {
  const double l = std::log(static_cast<double>(count));
  return 10.0 * rate * params.S0() * l * l;
}

std::vector<PhasePoint> coverage_queries(const PhaseSpaceBox& box, const LtftParams& params,
                                         std::size_t count) {
  require(count >= 1, Errc::invalid_parameter, "need at least one query");
  const auto n_b = static_cast<std::size_t>(std::max(1.0, std::round(std::sqrt(static_cast<double>(count)))));
  const std::size_t n_a = (count + n_b - 1) / n_b;
  std::vector<PhasePoint> queries;
  for (std::size_t i = 0; i < n_a && queries.size() < count; ++i) {
    for (std::size_t j = 0; j < n_b && queries.size() < count; ++j) {
      const double b = params.b0 * std::pow(params.b1 / params.b0,
                                            (static_cast<double>(j) + 0.5) / static_cast<double>(n_b));
      const double reach = box.time.hi - params.gamma / b;
      const double a = -reach + 2.0 * reach * (static_cast<double>(i) + 0.5) / static_cast<double>(n_a);
      queries.push_back({a, b, 0.5});
    }
  }
  return queries;
}

DwtGridParams matched_dwt_params(const LtftParams& params, double rate, std::size_t size,
                                 std::size_t count, double r) {
  DwtGridParams d;
  d.r = r;
  d.gamma = params.gamma;
  d.b0 = params.b0;
  d.rate = rate;
  d.samples = size;
  d.p = 1.0;
  d.p = static_cast<double>(count) / static_cast<double>(dwt_grid(d).samples.size());
  return d;
}

}  // namespace ltft::cli
