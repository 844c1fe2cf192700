#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace dualcount {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<std::vector<mpq_class>>;

IntMatrix identity_matrix(int n);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& v);

RatMatrix to_rational(const IntMatrix& m);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
std::optional<RatMatrix> inverse(const RatMatrix& m);
mpq_class determinant(const RatMatrix& m);
std::optional<IntMatrix> to_integer(const RatMatrix& m);

/// Upper-triangular Hermite basis of the row lattice spanned by `rows` (full rank in Z^ncols).
/// Pivots are positive and entries above each pivot are reduced into [0, pivot).
IntMatrix hermite_row_basis(IntMatrix rows, int ncols);

/// Reduce v modulo the lattice with upper-triangular Hermite basis h: result has 0 <= v_i < h_ii.
IntVector reduce_mod_hermite(IntVector v, const IntMatrix& h);

/// Smith invariant factors greater than one of Z^ncols / rowspan(rows).
std::vector<int> smith_invariants(IntMatrix rows, int ncols);

}  // namespace dualcount
