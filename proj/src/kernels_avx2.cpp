// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; nothing here runs unless the dispatcher has verified
// CPU support at startup.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "coefrand/kernels.hpp"

namespace coefrand::kernels::avx2 {

double sum(const double* a, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(a + i + 4));
  }
  __m256d acc = _mm256_add_pd(acc0, acc1);
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += a[i];
  return s;
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  __m256d acc = _mm256_add_pd(acc0, acc1);
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

namespace {

// Shift the vector left by one/two elements, filling with zeros:
// [a0 a1 a2 a3] -> [0 a0 a1 a2] and [0 0 a0 a1].
inline __m256d shift1(__m256d x) {
  __m256d y = _mm256_permute4x64_pd(x, _MM_SHUFFLE(2, 1, 0, 3));
  return _mm256_blend_pd(y, _mm256_setzero_pd(), 0x1);
}

inline __m256d shift2(__m256d x) {
  __m256d y = _mm256_permute4x64_pd(x, _MM_SHUFFLE(1, 0, 3, 2));
  return _mm256_blend_pd(y, _mm256_setzero_pd(), 0x3);
}

}  // namespace

double prefix_square_sum(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  __m256d carry = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(a + i);
    // in-register inclusive prefix sum over the 4 lanes
    x = _mm256_add_pd(x, shift1(x));
    x = _mm256_add_pd(x, shift2(x));
    x = _mm256_add_pd(x, carry);
    acc = _mm256_fmadd_pd(x, x, acc);
    carry = _mm256_permute4x64_pd(x, _MM_SHUFFLE(3, 3, 3, 3));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  _mm256_store_pd(lanes, carry);
  double running = lanes[0];
  for (; i < n; ++i) {
    running += a[i];
    s += running * running;
  }
  return s;
}

void mul(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void sub_scalar(const double* a, double c, double* out, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), vc));
  for (; i < n; ++i) out[i] = a[i] - c;
}

}  // namespace coefrand::kernels::avx2

#endif  // x86-64
