#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dualcount/kernels.hpp"

namespace dualcount::kernels {

GeneratorBlock make_generator_block(const std::vector<IntMatrix>& gens, int n) {
  GeneratorBlock b;
  b.generators = static_cast<int>(gens.size());
  b.rank = gens.empty() ? 0 : static_cast<int>(gens[0].size());
  b.padded = (b.generators + 7) / 8 * 8;
  b.modulus = n;
  b.coeff.assign(static_cast<std::size_t>(b.rank) * b.rank * b.padded, 0);
  for (int i = 0; i < b.rank; ++i)
    for (int j = 0; j < b.rank; ++j)
      for (int g = 0; g < b.generators; ++g) {
        std::int64_t v = gens[g][i][j] % n;
        if (v < 0) v += n;
        b.coeff[(static_cast<std::size_t>(i) * b.rank + j) * b.padded + g] = static_cast<std::int32_t>(v);
      }
  std::uint64_t p = 1;
  for (int i = 0; i < b.rank; ++i) {
    b.radix.push_back(static_cast<std::uint32_t>(p));
    p *= static_cast<std::uint64_t>(n);
    if (p > 0xffffffffull) throw std::invalid_argument("orbit space too large for 32-bit indices");
  }
  return b;
}

void generator_images_scalar(const GeneratorBlock& b, const std::int32_t* x, std::uint32_t* out) {
  for (int g = 0; g < b.generators; ++g) {
    std::uint32_t index = 0;
    for (int i = 0; i < b.rank; ++i) {
      std::int64_t acc = 0;
      const std::int32_t* row = &b.coeff[static_cast<std::size_t>(i) * b.rank * b.padded + g];
      for (int j = 0; j < b.rank; ++j) acc += static_cast<std::int64_t>(row[static_cast<std::size_t>(j) * b.padded]) * x[j];
      index += static_cast<std::uint32_t>(acc % b.modulus) * b.radix[i];
    }
    out[g] = index;
  }
}

PhaseTable make_phase_table(int modulus) {
  PhaseTable t;
  t.modulus = modulus;
  for (int k = 0; k < modulus; ++k) {
    const double a = 2 * std::numbers::pi * k / modulus;
    t.re.push_back(std::cos(a));
    t.im.push_back(-std::sin(a));
  }
  return t;
}

std::complex<double> phase_sum_scalar(const std::vector<std::int32_t>& cols, const std::vector<std::int32_t>& signs,
                                      std::size_t count, const std::vector<std::int32_t>& y, const PhaseTable& t) {
  double re = 0, im = 0;
  const std::size_t r = y.size();
  for (std::size_t k = 0; k < count; ++k) {
    std::int64_t dot = 0;
    for (std::size_t j = 0; j < r; ++j) dot += static_cast<std::int64_t>(cols[j * count + k]) * y[j];
    std::int64_t p = dot % t.modulus;
    if (p < 0) p += t.modulus;
    re += signs[k] * t.re[p];
    im += signs[k] * t.im[p];
  }
  return {re, im};
}

}  // namespace dualcount::kernels
