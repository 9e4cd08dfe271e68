#pragma once

#include "tlq/laurent_poly.hpp"

namespace tlq {

/// [n]_q = (q^n - q^-n)/(q - q^-1) with q = a^2, as a Laurent polynomial in a.
/// Defined for all integers n ([-n] = -[n]).
LaurentPoly quantum_int(int n);

/// [n]_q [n-1]_q ... [1]_q, with [0]! = 1. Requires n >= 0.
LaurentPoly quantum_factorial(int n);

/// -(a^2 + a^-2)
LaurentPoly loop_value();

}  // namespace tlq
