#include "nlsenergy/spectral/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>

namespace nlsenergy::spectral {
namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

template <class Real>
struct Fftw;

template <>
struct Fftw<double> {
  using complex = fftw_complex;
  using plan = fftw_plan;
  static complex* alloc(std::size_t n) { return fftw_alloc_complex(n); }
  static void free(void* p) { fftw_free(p); }
  static plan make(int n, complex* a, int sign) { return fftw_plan_dft_1d(n, a, a, sign, FFTW_ESTIMATE); }
  static void destroy(void* p) { fftw_destroy_plan(static_cast<plan>(p)); }
  static void execute(void* p) { fftw_execute(static_cast<plan>(p)); }
};

template <>
struct Fftw<long double> {
  using complex = fftwl_complex;
  using plan = fftwl_plan;
  static complex* alloc(std::size_t n) { return fftwl_alloc_complex(n); }
  static void free(void* p) { fftwl_free(p); }
  static plan make(int n, complex* a, int sign) { return fftwl_plan_dft_1d(n, a, a, sign, FFTW_ESTIMATE); }
  static void destroy(void* p) { fftwl_destroy_plan(static_cast<plan>(p)); }
  static void execute(void* p) { fftwl_execute(static_cast<plan>(p)); }
};

}  // namespace

template <class Real>
BasicFft<Real>::BasicFft(int n) : n_(n) {
  using F = Fftw<Real>;
  if (n < 1) throw std::invalid_argument("transform size must be positive");
  auto* raw = F::alloc(static_cast<std::size_t>(n));
  if (!raw) throw std::bad_alloc();
  data_ = reinterpret_cast<value_type*>(raw);
  {
    std::lock_guard lock(planner_mutex());
    forward_plan_ = F::make(n, raw, FFTW_FORWARD);
    backward_plan_ = F::make(n, raw, FFTW_BACKWARD);
  }
  if (!forward_plan_ || !backward_plan_) {
    release();
    throw std::runtime_error("FFTW planning failed for size " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) data_[i] = 0;
}

template <class Real>
BasicFft<Real>::~BasicFft() {
  release();
}

template <class Real>
BasicFft<Real>::BasicFft(BasicFft&& other) noexcept
    : n_(std::exchange(other.n_, 0)),
      data_(std::exchange(other.data_, nullptr)),
      forward_plan_(std::exchange(other.forward_plan_, nullptr)),
      backward_plan_(std::exchange(other.backward_plan_, nullptr)) {}

template <class Real>
BasicFft<Real>& BasicFft<Real>::operator=(BasicFft&& other) noexcept {
  if (this != &other) {
    release();
    n_ = std::exchange(other.n_, 0);
    data_ = std::exchange(other.data_, nullptr);
    forward_plan_ = std::exchange(other.forward_plan_, nullptr);
    backward_plan_ = std::exchange(other.backward_plan_, nullptr);
  }
  return *this;
}

template <class Real>
void BasicFft<Real>::release() noexcept {
  using F = Fftw<Real>;
  {
    std::lock_guard lock(planner_mutex());
    if (forward_plan_) F::destroy(forward_plan_);
    if (backward_plan_) F::destroy(backward_plan_);
  }
  forward_plan_ = backward_plan_ = nullptr;
  if (data_) F::free(data_);
  data_ = nullptr;
}

template <class Real>
void BasicFft<Real>::forward() {
  Fftw<Real>::execute(forward_plan_);
}

template <class Real>
void BasicFft<Real>::backward() {
  Fftw<Real>::execute(backward_plan_);
}

template <class Real>
BasicFft<Real>& thread_fft(int n) {
  thread_local std::map<int, std::unique_ptr<BasicFft<Real>>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<BasicFft<Real>>(n);
  return *slot;
}

const char* fft_library_version() { return fftw_version; }

template class BasicFft<double>;
template class BasicFft<long double>;
template BasicFft<double>& thread_fft<double>(int);
template BasicFft<long double>& thread_fft<long double>(int);

}  // namespace nlsenergy::spectral
