// AVX2 translation unit; built with -mavx2 where available and reached only
// after the runtime dispatch in kernels.cpp has confirmed CPU support.

#include <stdexcept>

#include "hgnoise/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

namespace hgnoise {

void fwht_avx2(std::span<double> v) {
  std::size_t len = v.size();
  if (len == 0 || (len & (len - 1)))
    throw std::invalid_argument("fwht: length must be a power of two");
  double* d = v.data();

  // Stages h = 1, 2 operate within a 4-lane block.
  if (len >= 4) {
    for (std::size_t i = 0; i < len; i += 4) {
      __m256d x = _mm256_loadu_pd(d + i);
      // h = 1: {a,b,c,d} -> {a+b, a-b, c+d, c-d}
      __m256d sw = _mm256_permute_pd(x, 0x5);  // {b,a,d,c}
      __m256d plus = _mm256_add_pd(x, sw);     // {a+b, b+a, c+d, d+c}
      __m256d minus = _mm256_sub_pd(sw, x);    // {b-a, a-b, d-c, c-d}
      x = _mm256_blend_pd(plus, minus, 0b1010);
      // h = 2: {p,q,r,s} -> {p+r, q+s, p-r, q-s}
      __m256d lo = _mm256_permute2f128_pd(x, x, 0x00);  // {p,q,p,q}
      __m256d hi = _mm256_permute2f128_pd(x, x, 0x11);  // {r,s,r,s}
      plus = _mm256_add_pd(lo, hi);
      minus = _mm256_sub_pd(lo, hi);
      x = _mm256_blend_pd(plus, minus, 0b1100);
      _mm256_storeu_pd(d + i, x);
    }
  } else if (len == 2) {
    double a = d[0], b = d[1];
    d[0] = a + b;
    d[1] = a - b;
  }

  for (std::size_t h = 4; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; j += 4) {
        __m256d a = _mm256_loadu_pd(d + j);
        __m256d b = _mm256_loadu_pd(d + j + h);
        _mm256_storeu_pd(d + j, _mm256_add_pd(a, b));
        _mm256_storeu_pd(d + j + h, _mm256_sub_pd(a, b));
      }
    }
  }
}

void pointwise_mul_avx2(std::span<const double> a, std::span<const double> b,
                        std::span<double> out) {
  std::size_t i = 0;
  for (; i + 4 <= out.size(); i += 4) {
    __m256d x = _mm256_loadu_pd(a.data() + i);
    __m256d y = _mm256_loadu_pd(b.data() + i);
    _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(x, y));
  }
  for (; i < out.size(); ++i) out[i] = a[i] * b[i];
}

}  // namespace hgnoise

#else  // fallback definitions when the TU is built without AVX2

namespace hgnoise {

void fwht_avx2(std::span<double> v) { fwht_scalar(v); }

void pointwise_mul_avx2(std::span<const double> a, std::span<const double> b,
                        std::span<double> out) {
  pointwise_mul_scalar(a, b, out);
}

}  // namespace hgnoise

#endif
