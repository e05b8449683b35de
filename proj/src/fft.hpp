#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace tslab::detail {

/// Owning wrapper around a 1-D complex FFTW plan with its own aligned buffers.
/// execute() computes out[k] = sum_j in[j] exp(sign * 2 pi i j k / n), unnormalized.
/// Plan creation is serialized internally; a single FftPlan must not be used
/// from two threads at once.
class FftPlan {
 public:
  FftPlan(std::size_t n, int sign);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;
  FftPlan(FftPlan&& other) noexcept;
  FftPlan& operator=(FftPlan&& other) noexcept;

  std::size_t size() const { return n_; }
  void execute(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

 private:
  void release() noexcept;

  std::size_t n_ = 0;
  void* plan_ = nullptr;
  std::complex<double>* in_ = nullptr;
  std::complex<double>* out_ = nullptr;
};

}  // namespace tslab::detail
