#include "coefrand/kernels.hpp"

namespace coefrand::kernels::scalar {

double sum(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double prefix_square_sum(const double* a, std::size_t n) {
  double running = 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    running += a[i];
    acc += running * running;
  }
  return acc;
}

void mul(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void sub_scalar(const double* a, double c, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - c;
}

}  // namespace coefrand::kernels::scalar
