#include <immintrin.h>

#include "dualcount/kernels.hpp"

namespace dualcount::kernels {

// Lanes are generators. Products stay below 2^31 because entries are reduced mod n and
// the orbit space n^rank fits in 32 bits.
void generator_images_avx2(const GeneratorBlock& b, const std::int32_t* x, std::uint32_t* out) {
  const __m256 inv_n = _mm256_set1_ps(1.0f / static_cast<float>(b.modulus));
  const __m256i n = _mm256_set1_epi32(b.modulus);
  const __m256i zero = _mm256_setzero_si256();
  for (int g0 = 0; g0 < b.padded; g0 += 8) {
    __m256i index = zero;
    for (int i = 0; i < b.rank; ++i) {
      __m256i acc = zero;
      const std::int32_t* base = &b.coeff[static_cast<std::size_t>(i) * b.rank * b.padded + g0];
      for (int j = 0; j < b.rank; ++j) {
        const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + static_cast<std::size_t>(j) * b.padded));
        acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(c, _mm256_set1_epi32(x[j])));
      }
      // acc mod n via a float quotient and one correction step each way
      __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(acc), inv_n));
      __m256i r = _mm256_sub_epi32(acc, _mm256_mullo_epi32(q, n));
      r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), n));
      r = _mm256_sub_epi32(r, _mm256_andnot_si256(_mm256_cmpgt_epi32(n, r), n));
      index = _mm256_add_epi32(index, _mm256_mullo_epi32(r, _mm256_set1_epi32(static_cast<int>(b.radix[i]))));
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), index);
    for (int g = g0; g < b.generators && g < g0 + 8; ++g) out[g] = lanes[g - g0];
  }
}

std::complex<double> phase_sum_avx2(const std::vector<std::int32_t>& cols, const std::vector<std::int32_t>& signs,
                                    std::size_t count, const std::vector<std::int32_t>& y, const PhaseTable& t) {
  const std::size_t r = y.size();
  const __m256 inv_m = _mm256_set1_ps(1.0f / static_cast<float>(t.modulus));
  const __m256i m = _mm256_set1_epi32(t.modulus);
  const __m256i zero = _mm256_setzero_si256();
  __m256d re = _mm256_setzero_pd(), im = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= count; k += 8) {
    __m256i dot = zero;
    for (std::size_t j = 0; j < r; ++j) {
      const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&cols[j * count + k]));
      dot = _mm256_add_epi32(dot, _mm256_mullo_epi32(c, _mm256_set1_epi32(y[j])));
    }
    __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(dot), inv_m));
    __m256i p = _mm256_sub_epi32(dot, _mm256_mullo_epi32(q, m));
    p = _mm256_add_epi32(p, _mm256_and_si256(_mm256_cmpgt_epi32(zero, p), m));
    p = _mm256_sub_epi32(p, _mm256_andnot_si256(_mm256_cmpgt_epi32(m, p), m));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&signs[k]));
    const __m128i p_lo = _mm256_castsi256_si128(p), p_hi = _mm256_extracti128_si256(p, 1);
    const __m256d s_lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(s));
    const __m256d s_hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(s, 1));
    re = _mm256_fmadd_pd(s_lo, _mm256_i32gather_pd(t.re.data(), p_lo, 8), re);
    re = _mm256_fmadd_pd(s_hi, _mm256_i32gather_pd(t.re.data(), p_hi, 8), re);
    im = _mm256_fmadd_pd(s_lo, _mm256_i32gather_pd(t.im.data(), p_lo, 8), im);
    im = _mm256_fmadd_pd(s_hi, _mm256_i32gather_pd(t.im.data(), p_hi, 8), im);
  }
  alignas(32) double a[4], b[4];
  _mm256_store_pd(a, re);
  _mm256_store_pd(b, im);
  std::complex<double> total(a[0] + a[1] + a[2] + a[3], b[0] + b[1] + b[2] + b[3]);
  if (k < count) {
    std::vector<std::int32_t> tail_cols;
    const std::size_t rest = count - k;
    for (std::size_t j = 0; j < r; ++j)
      tail_cols.insert(tail_cols.end(), cols.begin() + j * count + k, cols.begin() + j * count + count);
    std::vector<std::int32_t> tail_signs(signs.begin() + k, signs.begin() + count);
    total += phase_sum_scalar(tail_cols, tail_signs, rest, y, t);
  }
  return total;
}

}  // namespace dualcount::kernels
