#pragma once

#include <cstddef>
#include <span>

namespace hgnoise {

// Dense vector kernels behind the transform-domain code paths. Each entry
// point picks the widest implementation the CPU supports at runtime; the
// scalar versions are the reference and the SIMD variants must match them
// bit for bit (every output element is a single add/sub/mul of the same
// operands in either path).
enum class SimdLevel { scalar, avx2 };

SimdLevel best_simd_level();
SimdLevel active_simd_level();
void set_simd_level(SimdLevel level);  // test hook; clamps to best supported

// In-place Walsh-Hadamard transform, length a power of two.
// (Hv)_b = sum_a (-1)^{a.b} v_a; applying it twice multiplies by the length.
void fwht(std::span<double> v);
void fwht_scalar(std::span<double> v);
void fwht_avx2(std::span<double> v);

// out[i] = a[i] * b[i]
void pointwise_mul(std::span<const double> a, std::span<const double> b,
                   std::span<double> out);
void pointwise_mul_scalar(std::span<const double> a, std::span<const double> b,
                          std::span<double> out);
void pointwise_mul_avx2(std::span<const double> a, std::span<const double> b,
                        std::span<double> out);

}  // namespace hgnoise
