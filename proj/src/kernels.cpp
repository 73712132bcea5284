#include "hgnoise/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace hgnoise {

static bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

SimdLevel best_simd_level() {
#ifdef HGNOISE_HAVE_AVX2_TU
  return cpu_has_avx2() ? SimdLevel::avx2 : SimdLevel::scalar;
#else
  return SimdLevel::scalar;
#endif
}

static std::atomic<SimdLevel> g_level{best_simd_level()};

SimdLevel active_simd_level() { return g_level.load(); }

void set_simd_level(SimdLevel level) {
  if (level == SimdLevel::avx2 && best_simd_level() != SimdLevel::avx2)
    level = SimdLevel::scalar;
  g_level.store(level);
}

static void check_pow2(std::size_t len) {
  if (len == 0 || (len & (len - 1)))
    throw std::invalid_argument("fwht: length must be a power of two");
}

void fwht_scalar(std::span<double> v) {
  check_pow2(v.size());
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        double a = v[j];
        double b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

void pointwise_mul_scalar(std::span<const double> a, std::span<const double> b,
                          std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
}

void fwht(std::span<double> v) {
  if (active_simd_level() == SimdLevel::avx2)
    fwht_avx2(v);
  else
    fwht_scalar(v);
}

void pointwise_mul(std::span<const double> a, std::span<const double> b,
                   std::span<double> out) {
  if (a.size() != b.size() || a.size() != out.size())
    throw std::invalid_argument("pointwise_mul: size mismatch");
  if (active_simd_level() == SimdLevel::avx2)
    pointwise_mul_avx2(a, b, out);
  else
    pointwise_mul_scalar(a, b, out);
}

}  // namespace hgnoise
