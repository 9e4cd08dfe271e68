#include "tlq/quantum.hpp"

#include "tlq/errors.hpp"

namespace tlq {

LaurentPoly quantum_int(int n) {
  if (n < 0) return -quantum_int(-n);
  LaurentPoly out;
  for (int i = 0; i < n; ++i) out += LaurentPoly::a_pow(2 * (n - 1 - 2 * i));
  return out;
}

LaurentPoly quantum_factorial(int n) {
  if (n < 0) throw InvalidArgument("quantum factorial of a negative integer");
  LaurentPoly out = 1;
  for (int i = 2; i <= n; ++i) out *= quantum_int(i);
  return out;
}

LaurentPoly loop_value() { return -(LaurentPoly::a_pow(2) + LaurentPoly::a_pow(-2)); }

}  // namespace tlq
