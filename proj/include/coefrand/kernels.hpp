#pragma once

#include <cstddef>

// Low-level arithmetic kernels shared by every statistic and simulator.
//
// Each kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant. The active backend is picked once at startup from the
// CPU's capabilities; set COEFRAND_SIMD=scalar (or avx2) to force one.
// SIMD results may differ from scalar by reassociation round-off only;
// the equivalence test suite pins the two together.

namespace coefrand::kernels {

namespace scalar {
double sum(const double* a, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
// sum over i of (a_0 + ... + a_i)^2 -- the cumulative-score accumulator
// at the heart of the Nyblom-type statistics.
double prefix_square_sum(const double* a, std::size_t n);
void mul(const double* a, const double* b, double* out, std::size_t n);
void sub_scalar(const double* a, double c, double* out, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double sum(const double* a, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double prefix_square_sum(const double* a, std::size_t n);
void mul(const double* a, const double* b, double* out, std::size_t n);
void sub_scalar(const double* a, double c, double* out, std::size_t n);
}  // namespace avx2
#endif

struct Backend {
  const char* name;
  double (*sum)(const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*prefix_square_sum)(const double*, std::size_t);
  void (*mul)(const double*, const double*, double*, std::size_t);
  void (*sub_scalar)(const double*, double, double*, std::size_t);
};

// Resolved once (thread-safe); honours the COEFRAND_SIMD override.
const Backend& active();

inline double sum(const double* a, std::size_t n) { return active().sum(a, n); }
inline double dot(const double* a, const double* b, std::size_t n) { return active().dot(a, b, n); }
inline double sumsq(const double* a, std::size_t n) { return active().dot(a, a, n); }
inline double prefix_square_sum(const double* a, std::size_t n) {
  return active().prefix_square_sum(a, n);
}
inline void mul(const double* a, const double* b, double* out, std::size_t n) {
  active().mul(a, b, out, n);
}
inline void sub_scalar(const double* a, double c, double* out, std::size_t n) {
  active().sub_scalar(a, c, out, n);
}

}  // namespace coefrand::kernels
