#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ltft/params.hpp"
#include "ltft/signal.hpp"

namespace ltft {

/// Frame operator of the LTFT restricted to [0, L] x [0, 1] in frequency and
/// oscillation, as a multiplier h_k on the DFT grid omega_k = k L / M.
///
/// Sampled atoms see a periodized spectrum, so each component is folded over
/// the aliases omega_k + j L that carry atom energy.
struct FrameDiagonal {
  double rate = 1.0;
  std::vector<double> h;
  std::vector<double> q0;  ///< low band
  std::vector<double> q1;  ///< wavelet band
  std::vector<double> q2;  ///< high band
  double floor = 0.0;      ///< 1e-8 max(h); bins at or below are treated as uncovered

  std::size_t size() const noexcept { return h.size(); }
  double omega(std::size_t k) const noexcept {
    return static_cast<double>(k) * rate / static_cast<double>(h.size());
  }
};

/// Closed-form diagonal; cost is linear in M after a parameter-dependent table.
FrameDiagonal frame_diagonal(const LtftParams& params, double rate, std::size_t size);

/// Brute-force midpoint quadrature of |f^_{0,b,c}(omega)|^2 over b and c, with
/// quad_res nodes per axis and per band. Test oracle.
FrameDiagonal frame_diagonal_oracle(const LtftParams& params, double rate, std::size_t size,
                                    std::size_t quad_res);

/// Individual unfolded components at a single frequency (diagnostics and tests).
double frame_q0(const LtftParams& params, double rate, double omega);
double frame_q1(const LtftParams& params, double rate, double omega);
std::vector<double> frame_q1(const LtftParams& params, double rate, const std::vector<double>& omegas);
double frame_q2(const LtftParams& params, double rate, double omega);

/// dft, divide bin k by h_k (zero where h_k <= floor), idft.
DigitalSignal apply_inverse_frame(const DigitalSignal& signal, const FrameDiagonal& hd);
/// dft, multiply bin k by h_k, idft.
DigitalSignal apply_forward_frame(const DigitalSignal& signal, const FrameDiagonal& hd);

/// Rows omega,h,q0,q1,q2 after a header line.
void write_csv(std::ostream& out, const FrameDiagonal& hd);

}  // namespace ltft
