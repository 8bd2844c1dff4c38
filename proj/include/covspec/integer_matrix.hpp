#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "covspec/rational.hpp"

namespace covspec {

using IntVector = std::vector<Integer>;
/// Row-major integer matrix; each row is a vector.
using IntMatrix = std::vector<IntVector>;

/// Row-style Hermite normal form of the row space over Z: zero rows dropped,
/// pivots positive and strictly increasing in column, entries above a pivot
/// reduced into [0, pivot). Rows must share one length.
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t columns);

/// Nonzero invariant factors d1 | d2 | ... of the row space quotient, i.e. the
/// Smith normal form diagonal without trailing zeros.
std::vector<Integer> smith_invariants(IntMatrix m);

/// Integer coefficients x with x * basis == v, where basis is in Hermite normal
/// form. Empty when v is not in the row space.
std::optional<IntVector> hnf_coordinates(const IntMatrix& basis, const IntVector& v);

/// Product of the pivots of a full-rank square Hermite normal form.
Integer hnf_determinant(const IntMatrix& basis);

}  // namespace covspec
