#include "fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "ltft/error.hpp"

namespace ltft::detail {
namespace {
// The FFTW planner is not thread-safe; execution is.
std::mutex g_planner_mutex;
}  // namespace

void fft_inplace(std::vector<std::complex<double>>& data, int sign) {
  if (data.empty()) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan = nullptr;
  {
    std::lock_guard lock(g_planner_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf,
                            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (plan == nullptr) fail(Errc::invalid_parameter, "FFTW could not plan the transform");
  fftw_execute(plan);
  std::lock_guard lock(g_planner_mutex);
  fftw_destroy_plan(plan);
}

}  // namespace ltft::detail
