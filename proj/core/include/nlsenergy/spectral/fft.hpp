#pragma once

#include <complex>
#include <cstddef>

namespace nlsenergy::spectral {

/// In-place complex transform of fixed size on an owned, aligned buffer.
///
///   forward:  a_j <- sum_x a_x e^{-2 pi i j x / n}
///   backward: a_x <- sum_j a_j e^{+2 pi i j x / n}
///
/// Neither direction normalizes. Plans are built with FFTW_ESTIMATE so results
/// do not depend on machine timing; planning is serialized internally.
/// Real is double or long double.
template <class Real>
class BasicFft {
 public:
  using value_type = std::complex<Real>;

  explicit BasicFft(int n);
  ~BasicFft();
  BasicFft(BasicFft&& other) noexcept;
  BasicFft& operator=(BasicFft&& other) noexcept;
  BasicFft(const BasicFft&) = delete;
  BasicFft& operator=(const BasicFft&) = delete;

  int size() const { return n_; }
  value_type* data() { return data_; }
  const value_type* data() const { return data_; }

  void forward();
  void backward();

 private:
  void release() noexcept;

  int n_ = 0;
  value_type* data_ = nullptr;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

using Fft = BasicFft<double>;
using ExtendedFft = BasicFft<long double>;

/// Version string of the linked FFTW.
const char* fft_library_version();

/// Per-thread cached transform of size n.
template <class Real>
BasicFft<Real>& thread_fft(int n);

}  // namespace nlsenergy::spectral
