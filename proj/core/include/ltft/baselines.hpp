#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ltft/params.hpp"
#include "ltft/phase_space.hpp"

namespace ltft {

/// Morlet-like discrete wavelet grid: scales r^k, r^k (M/L) p time samples each.
struct DwtGridParams {
  double r = 1.1;      ///< dilation step, 1 < r < (gamma + 1/2) / (gamma - 1/2)
  double p = 1.0;      ///< time-spacing factor
  double b0 = 0.5;     ///< lowest band edge
  double rate = 4.0;   ///< L
  std::size_t samples = 5;  ///< M
  double gamma = 1.0;

  void validate() const;
  /// (gamma + 1/2) / (gamma - 1/2).
  double max_step() const noexcept { return (gamma + 0.5) / (gamma - 0.5); }
};

struct DwtGrid {
  SampleSet samples;  ///< two-dimensional; c = 0 everywhere
  int k_min = 0;
  int k_max = -1;
  std::vector<std::size_t> counts;  ///< points per scale, k_min .. k_max
  double estimate = 0.0;            ///< H(gamma, p, q) (L - b0)
};

/// Scales k = ceil(K0) .. ceil(K1) with K0 = ln(b0 / (gamma + 1/2)) / ln r and
/// K1 = ln(L / (gamma - 1/2)) / ln r. Scale k holds round(r^k (M/L) p) points
/// (at least one) at the cell midpoints of the time interval, at frequency
/// gamma r^k. The frequency side of the box is [0, gamma r^{k_max + 1/2}].
DwtGrid dwt_grid(const DwtGridParams& params);

/// Lower estimate H(gamma, p, q) (L - b0) of the grid size.
double dwt_size_estimate(const DwtGridParams& params);

/// Grid of about `target` points whose number of scales grows like sqrt(target):
/// ln r is the covered log-frequency range over sqrt(target), capped below the
/// legal maximum, and p is chosen to bring the size closest to the target.
DwtGridParams balanced_dwt_params(std::size_t target, double rate = 4.0, double gamma = 1.0,
                                  double b0 = 0.5, std::size_t samples = 5);

/// Tensor grid of cell midpoints. A two-dimensional box needs n_osc = 1.
SampleSet regular_grid(std::size_t n_time, std::size_t n_freq, std::size_t n_osc,
                       const PhaseSpaceBox& box);

struct DiscrepancyRow {
  std::size_t n = 0;
  double d_star = 0.0;
  double d_star_std = 0.0;  ///< across seeds (mc); 0 otherwise
};

struct DiscrepancyTable {
  Generator generator = Generator::hammersley;
  std::size_t dim = 2;
  std::vector<DiscrepancyRow> rows;
  double slope = 0.0;  ///< least-squares slope of log D* against log N
};

struct ScalingOptions {
  std::size_t mc_seeds = 10;
  std::uint64_t seed = 0;
  /// Setting of the balanced DWT family.
  double dwt_rate = 4.0;
  double dwt_gamma = 1.0;
  double dwt_b0 = 0.5;
  std::size_t dwt_samples = 5;
};

/// Exact star discrepancy against N. DWT grids are mapped to the unit square by
/// their box; regular grids use the k x k midpoint lattice with k = round(sqrt N).
/// Row N is the realized point count.
DiscrepancyTable discrepancy_scaling(Generator generator, const std::vector<std::size_t>& counts,
                                     std::size_t dim, const ScalingOptions& options = {});

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Columns generator,N,D_star,slope.
void write_csv(std::ostream& out, const std::vector<DiscrepancyTable>& tables);

enum class FunnelKind {
  wavelet,  ///< (a', b') queries; box [a' -+ gamma/b'] x [b' -+ b'/gamma]
  ltft,     ///< (a', b', c') queries; gamma + xi c' oscillations and half-width nu in c
};

struct CoverageReport {
  std::vector<double> values;  ///< one per query; excluded queries hold 0
  std::vector<bool> excluded;  ///< adjoint box leaves the sample box
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double ratio = 0.0;  ///< max / min over included queries (infinite if min is 0)
  double nu = 0.25;
};

/// (mu / N) #{n : g_n in H(q)} / vol(H(q)) for every query q, H being the
/// adjoint Heisenberg box of the funnel.
CoverageReport funnel_coverage(const SampleSet& samples, const std::vector<PhasePoint>& queries,
                               const LtftParams& params, FunnelKind kind = FunnelKind::wavelet,
                               double nu = 0.25);

}  // namespace ltft
