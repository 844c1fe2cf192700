#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dualcount/intmat.hpp"

namespace dualcount::kernels {

enum class Backend { Scalar, AVX2 };

std::string backend_name(Backend b);
bool backend_available(Backend b);
/// Chosen once from CPU features; DUALCOUNT_KERNELS=scalar forces the reference path.
Backend active_backend();
/// Test hook; std::nullopt restores automatic selection.
void set_backend_override(std::optional<Backend> b);

/// Weyl generators reduced mod n, laid out [i][j][g] with g padded to a multiple of 8 lanes.
struct GeneratorBlock {
  int rank = 0;
  int generators = 0;
  int padded = 0;
  int modulus = 1;
  std::vector<std::int32_t> coeff;
  std::vector<std::uint32_t> radix;  // n^i
};

GeneratorBlock make_generator_block(const std::vector<IntMatrix>& gens, int n);

/// out[g] = index of (G_g x mod n) with index(y) = Σ y_i n^i; x has entries in [0, n).
void generator_images_scalar(const GeneratorBlock& b, const std::int32_t* x, std::uint32_t* out);
void generator_images_avx2(const GeneratorBlock& b, const std::int32_t* x, std::uint32_t* out);
void generator_images(const GeneratorBlock& b, const std::int32_t* x, std::uint32_t* out);

/// Σ_k sign_k exp(-2πi (rows_k · y) / M) with rows stored column-major: cols[j * count + k].
struct PhaseTable {
  int modulus = 1;
  std::vector<double> re;
  std::vector<double> im;
};
PhaseTable make_phase_table(int modulus);

std::complex<double> phase_sum_scalar(const std::vector<std::int32_t>& cols, const std::vector<std::int32_t>& signs,
                                      std::size_t count, const std::vector<std::int32_t>& y, const PhaseTable& t);
std::complex<double> phase_sum_avx2(const std::vector<std::int32_t>& cols, const std::vector<std::int32_t>& signs,
                                    std::size_t count, const std::vector<std::int32_t>& y, const PhaseTable& t);
std::complex<double> phase_sum(const std::vector<std::int32_t>& cols, const std::vector<std::int32_t>& signs,
                               std::size_t count, const std::vector<std::int32_t>& y, const PhaseTable& t);

}  // namespace dualcount::kernels
