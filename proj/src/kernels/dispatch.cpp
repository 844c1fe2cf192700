#include <atomic>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <mutex>

#include "dualcount/kernels.hpp"

namespace dualcount::kernels {

namespace {

std::mutex override_lock;
std::optional<Backend> override_backend;

Backend detect() {
  if (const char* env = std::getenv("DUALCOUNT_KERNELS"); env && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
  return backend_available(Backend::AVX2) ? Backend::AVX2 : Backend::Scalar;
}

// Float-quotient reduction is exact only while |value| stays well inside the float mantissa.
bool fits_float_reduction(std::int64_t bound) { return bound < (std::int64_t{1} << 22); }

}  // namespace

std::string backend_name(Backend b) { return b == Backend::AVX2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) {
  if (b == Backend::Scalar) return true;
#if defined(DUALCOUNT_WITH_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() {
  {
    std::lock_guard guard(override_lock);
    if (override_backend) return *override_backend;
  }
  static const Backend detected = detect();
  return detected;
}

void set_backend_override(std::optional<Backend> b) {
  if (b && !backend_available(*b)) b = Backend::Scalar;
  std::lock_guard guard(override_lock);
  override_backend = b;
}

#if !defined(DUALCOUNT_WITH_AVX2)
void generator_images_avx2(const GeneratorBlock& b, const std::int32_t* x, std::uint32_t* out) {
  generator_images_scalar(b, x, out);
}
std::complex<double> phase_sum_avx2(const std::vector<std::int32_t>& cols, const std::vector<std::int32_t>& signs,
                                    std::size_t count, const std::vector<std::int32_t>& y, const PhaseTable& t) {
  return phase_sum_scalar(cols, signs, count, y, t);
}
#endif

void generator_images(const GeneratorBlock& b, const std::int32_t* x, std::uint32_t* out) {
  const std::int64_t bound = static_cast<std::int64_t>(b.modulus) * b.modulus * (b.rank + 1);
  if (active_backend() == Backend::AVX2 && fits_float_reduction(bound)) generator_images_avx2(b, x, out);
  else generator_images_scalar(b, x, out);
}

std::complex<double> phase_sum(const std::vector<std::int32_t>& cols, const std::vector<std::int32_t>& signs,
                               std::size_t count, const std::vector<std::int32_t>& y, const PhaseTable& t) {
  if (active_backend() == Backend::AVX2) {
    std::int64_t max_col = 0, max_y = 0;
    for (auto c : cols) max_col = std::max<std::int64_t>(max_col, std::abs(c));
    for (auto v : y) max_y = std::max<std::int64_t>(max_y, std::abs(v));
    const std::int64_t bound = max_col * max_y * static_cast<std::int64_t>(y.size() + 1);
    if (fits_float_reduction(bound) && fits_float_reduction(t.modulus)) return phase_sum_avx2(cols, signs, count, y, t);
  }
  return phase_sum_scalar(cols, signs, count, y, t);
}

}  // namespace dualcount::kernels
