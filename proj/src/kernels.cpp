#include "coefrand/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace coefrand::kernels {

namespace {

constexpr Backend kScalar{
    "scalar",       scalar::sum, scalar::dot, scalar::prefix_square_sum,
    scalar::mul,    scalar::sub_scalar,
};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Backend kAvx2{
    "avx2",       avx2::sum, avx2::dot, avx2::prefix_square_sum,
    avx2::mul,    avx2::sub_scalar,
};

bool cpu_has_avx2_fma() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const Backend& resolve() {
  const char* force = std::getenv("COEFRAND_SIMD");
  if (force != nullptr && std::strcmp(force, "scalar") == 0) return kScalar;
#if defined(__x86_64__) || defined(_M_X64)
  if (force != nullptr && std::strcmp(force, "avx2") == 0) return kAvx2;
  if (force == nullptr && cpu_has_avx2_fma()) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

const Backend& active() {
  static const Backend& backend = resolve();
  return backend;
}

}  // namespace coefrand::kernels
