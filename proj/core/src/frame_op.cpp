#include "ltft/frame_op.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "ltft/csv.hpp"
#include "ltft/error.hpp"
#include "ltft/parallel.hpp"

namespace ltft {
namespace {

constexpr std::array<double, 5> kGaussNodes = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                               0.5384693101056831, 0.9061798459386640};
constexpr std::array<double, 5> kGaussWeights = {0.2369268850561891, 0.4786286704993665,
                                                 0.5688888888888889, 0.4786286704993665,
                                                 0.2369268850561891};

double hermite(double s, double y0, double y1, double d0, double d1) {
  const double s2 = s * s;
  const double s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * d0 + (-2 * s3 + 3 * s2) * y1 +
         (s3 - s2) * d1;
}

// P1(q) = (gamma / xi) [Phi(q - gamma) - Phi(q - gamma - xi)]
double p1(const LtftParams& params, double q) {
  const WindowSpec& w = *params.window;
  return params.gamma / params.xi *
         (w.energy_cdf(q - params.gamma) - w.energy_cdf(q - params.gamma - params.xi));
}

// R(y) = int_{-inf}^{y} P1(e^t) dt, so that Q1(omega) = R(ln(gamma omega / b0)) - R(ln(gamma omega / b1)).
// P1 is flat below q_lo and vanishes above q_hi, where Phi saturates.
class LogIntegral {
 public:
  explicit LogIntegral(const LtftParams& params) : params_(params) {
    const double q_lo = 1e-3;
    const double q_hi = params.gamma + params.xi + params.window->table_limit();
    y_lo_ = std::log(q_lo);
    y_hi_ = std::log(q_hi);
    const double step_target = 1.0 / (128.0 * q_hi);
    cells_ = static_cast<std::size_t>(std::ceil((y_hi_ - y_lo_) / step_target));
    step_ = (y_hi_ - y_lo_) / static_cast<double>(cells_);
    slope_lo_ = p1(params, q_lo);
    r_.assign(cells_ + 1, 0.0);
    d_.assign(cells_ + 1, 0.0);
    // Everything below y_lo is the linear extension anchored at R(y_lo) = 0; only
    // differences of R are used.
    for (std::size_t i = 0; i <= cells_; ++i) d_[i] = p1(params, std::exp(node(i)));
    for (std::size_t i = 0; i < cells_; ++i) {
      const double left = node(i);
      double mass = 0.0;
      for (std::size_t q = 0; q < kGaussNodes.size(); ++q) {
        const double y = left + 0.5 * step_ * (kGaussNodes[q] + 1.0);
        mass += p1(params, std::exp(y)) * 0.5 * step_ * kGaussWeights[q];
      }
      r_[i + 1] = r_[i] + mass;
    }
  }

  double operator()(double y) const noexcept {
    if (y <= y_lo_) return slope_lo_ * (y - y_lo_);
    if (y >= y_hi_) return r_.back();
    const double x = (y - y_lo_) / step_;
    const auto i = std::min(static_cast<std::size_t>(x), cells_ - 1);
    const double s = x - static_cast<double>(i);
    return hermite(s, r_[i], r_[i + 1], d_[i] * step_, d_[i + 1] * step_);
  }

  double q1(double omega) const noexcept {
    if (omega <= 0.0) return 0.0;
    const double g = params_.gamma * omega;
    return (*this)(std::log(g / params_.b0)) - (*this)(std::log(g / params_.b1));
  }

 private:
  double node(std::size_t i) const noexcept { return y_lo_ + static_cast<double>(i) * step_; }

  const LtftParams& params_;
  double y_lo_ = 0.0;
  double y_hi_ = 0.0;
  double step_ = 0.0;
  double slope_lo_ = 0.0;
  std::size_t cells_ = 0;
  std::vector<double> r_;
  std::vector<double> d_;
};

double q0_at(const LtftParams& params, double omega) {
  const WindowSpec& w = *params.window;
  const double g = params.gamma;
  const double x = params.xi;
  const double u = g * omega / params.b0;
  return (w.energy_cdf2(u) - w.energy_cdf2(u - g) - w.energy_cdf2(u - x) +
          w.energy_cdf2(u - g - x)) / x;
}

double q2_at(const LtftParams& params, double rate, double omega) {
  const WindowSpec& w = *params.window;
  const double g = params.gamma;
  const double x = params.xi;
  const double v = g * omega / params.b1;
  const double top = g * rate / params.b1;
  return (w.energy_cdf2(v - g) - w.energy_cdf2(v - g - x) - w.energy_cdf2(v - top) +
          w.energy_cdf2(v - top - x)) / x;
}

// Aliases j = -1 .. j_hi cover every frequency where some atom in the box has
// spectral mass inside the window's main lobes.
int alias_count(const LtftParams& params, double rate) {
  const double f_max = rate + params.xi / params.gamma * params.b1 +
                       params.window->bandwidth() * params.b1 / params.gamma;
  return static_cast<int>(std::ceil(f_max / rate));
}

void finish(FrameDiagonal& hd) {
  double peak = 0.0;
  for (std::size_t k = 0; k < hd.h.size(); ++k) {
    hd.q0[k] = std::max(hd.q0[k], 0.0);
    hd.q1[k] = std::max(hd.q1[k], 0.0);
    hd.q2[k] = std::max(hd.q2[k], 0.0);
    hd.h[k] = hd.q0[k] + hd.q1[k] + hd.q2[k];
    peak = std::max(peak, hd.h[k]);
  }
  hd.floor = 1e-8 * peak;
}

FrameDiagonal empty_diagonal(double rate, std::size_t size) {
  require(rate > 0.0, Errc::invalid_parameter, "sample rate must be positive");
  require(size >= 4 && size % 2 == 0, Errc::invalid_parameter, "grid size must be even and >= 4");
  FrameDiagonal hd;
  hd.rate = rate;
  hd.h.assign(size, 0.0);
  hd.q0.assign(size, 0.0);
  hd.q1.assign(size, 0.0);
  hd.q2.assign(size, 0.0);
  return hd;
}

}  // namespace

double frame_q0(const LtftParams& params, double /*rate*/, double omega) {
  params.validate();
  return std::max(q0_at(params, omega), 0.0);
}

double frame_q1(const LtftParams& params, double /*rate*/, double omega) {
  params.validate();
  return std::max(LogIntegral(params).q1(omega), 0.0);
}

std::vector<double> frame_q1(const LtftParams& params, double /*rate*/,
                             const std::vector<double>& omegas) {
  params.validate();
  const LogIntegral log_integral(params);
  std::vector<double> out;
  out.reserve(omegas.size());
  for (double w : omegas) out.push_back(std::max(log_integral.q1(w), 0.0));
  return out;
}

double frame_q2(const LtftParams& params, double rate, double omega) {
  params.validate();
  return std::max(q2_at(params, rate, omega), 0.0);
}

FrameDiagonal frame_diagonal(const LtftParams& params, double rate, std::size_t size) {
  params.validate();
  FrameDiagonal hd = empty_diagonal(rate, size);
  const LogIntegral log_integral(params);
  const int j_hi = alias_count(params, rate);
  parallel_for(size, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double base = hd.omega(k);
      for (int j = -1; j <= j_hi; ++j) {
        const double w = base + j * rate;
        hd.q0[k] += q0_at(params, w);
        hd.q1[k] += log_integral.q1(w);
        hd.q2[k] += q2_at(params, rate, w);
      }
    }
  }, 1024);
  finish(hd);
  return hd;
}

FrameDiagonal frame_diagonal_oracle(const LtftParams& params, double rate, std::size_t size,
                                    std::size_t quad_res) {
  params.validate();
  require(quad_res >= 128, Errc::invalid_parameter, "oracle needs at least 128 nodes per axis");
  const double work = static_cast<double>(size) * static_cast<double>(quad_res) *
                      static_cast<double>(quad_res);
  if (work > 1.5e8) fail(Errc::budget_exceeded, "oracle quadrature exceeds its work budget");
  FrameDiagonal hd = empty_diagonal(rate, size);
  const WindowSpec& win = *params.window;
  const double limit = win.table_limit();
  const int j_hi = alias_count(params, rate);
  const std::array<double, 4> edges = {0.0, params.b0, params.b1, rate};
  const double nq = static_cast<double>(quad_res);

  parallel_for(size, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double base = hd.omega(k);
      std::array<double, 3> acc = {0.0, 0.0, 0.0};
      for (int j = -1; j <= j_hi; ++j) {
        const double w = base + j * rate;
        for (std::size_t band = 0; band < 3; ++band) {
          const double db = (edges[band + 1] - edges[band]) / nq;
          double sum = 0.0;
          for (std::size_t ib = 0; ib < quad_res; ++ib) {
            const double b = edges[band] + (static_cast<double>(ib) + 0.5) * db;
            const double s = atom_scale(params, b);
            for (std::size_t ic = 0; ic < quad_res; ++ic) {
              const double c = (static_cast<double>(ic) + 0.5) / nq;
              const double u = (w - atom_modulation(params, b, c)) / s;
              if (std::abs(u) >= limit) continue;
              sum += win.energy_density(u) / s;
            }
          }
          acc[band] += sum * db / nq;
        }
      }
      hd.q0[k] = acc[0];
      hd.q1[k] = acc[1];
      hd.q2[k] = acc[2];
    }
  });
  finish(hd);
  return hd;
}

namespace {

DigitalSignal apply_diagonal(const DigitalSignal& signal, const FrameDiagonal& hd, bool inverse) {
  require(signal.size() == hd.size(), Errc::invalid_parameter,
          "frame diagonal does not match the signal length");
  require(signal.sample_rate() == hd.rate, Errc::invalid_parameter,
          "frame diagonal does not match the sample rate");
  Spectrum spec = dft(signal);
  for (std::size_t k = 0; k < spec.size(); ++k) {
    if (!inverse) {
      spec[k] *= hd.h[k];
    } else if (hd.h[k] > hd.floor) {
      spec[k] /= hd.h[k];
    } else {
      spec[k] = 0.0;
    }
  }
  return idft(spec);
}

}  // namespace

DigitalSignal apply_inverse_frame(const DigitalSignal& signal, const FrameDiagonal& hd) {
  return apply_diagonal(signal, hd, true);
}

DigitalSignal apply_forward_frame(const DigitalSignal& signal, const FrameDiagonal& hd) {
  return apply_diagonal(signal, hd, false);
}

void write_csv(std::ostream& out, const FrameDiagonal& hd) {
  csv::write_row(out, {"omega", "h", "q0", "q1", "q2"});
  for (std::size_t k = 0; k < hd.size(); ++k) {
    csv::write_row(out, {csv::number(hd.omega(k)), csv::number(hd.h[k]), csv::number(hd.q0[k]),
                         csv::number(hd.q1[k]), csv::number(hd.q2[k])});
  }
}

}  // namespace ltft
