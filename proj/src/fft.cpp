#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <utility>

#include "tslab/errors.hpp"

namespace tslab::detail {

namespace {
// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

FftPlan::FftPlan(std::size_t n, int sign) : n_(n) {
  if (n == 0) throw InvalidInput("FftPlan: size must be positive");
  std::lock_guard lock(planner_mutex());
  in_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(n));
  out_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(n));
  plan_ = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(in_),
                           reinterpret_cast<fftw_complex*>(out_), sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                           FFTW_ESTIMATE);
}

FftPlan::~FftPlan() { release(); }

FftPlan::FftPlan(FftPlan&& other) noexcept
    : n_(std::exchange(other.n_, 0)),
      plan_(std::exchange(other.plan_, nullptr)),
      in_(std::exchange(other.in_, nullptr)),
      out_(std::exchange(other.out_, nullptr)) {}

FftPlan& FftPlan::operator=(FftPlan&& other) noexcept {
  if (this != &other) {
    release();
    n_ = std::exchange(other.n_, 0);
    plan_ = std::exchange(other.plan_, nullptr);
    in_ = std::exchange(other.in_, nullptr);
    out_ = std::exchange(other.out_, nullptr);
  }
  return *this;
}

void FftPlan::release() noexcept {
  if (plan_ == nullptr && in_ == nullptr && out_ == nullptr) return;
  std::lock_guard lock(planner_mutex());
  if (plan_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(plan_));
  fftw_free(in_);
  fftw_free(out_);
  plan_ = nullptr;
  in_ = out_ = nullptr;
}

void FftPlan::execute(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
  if (in.size() != n_ || out.size() != n_) throw InvalidInput("FftPlan: buffer size mismatch");
  std::copy(in.begin(), in.end(), in_);
  fftw_execute(static_cast<fftw_plan>(plan_));
  std::copy(out_, out_ + n_, out.begin());
}

}  // namespace tslab::detail
