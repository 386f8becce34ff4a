#pragma once

#include "nichols/scalar.hpp"
#include "nichols/word.hpp"

namespace nichols {

// Value of the braiding bicharacter: always sign * q^exp for the matrix
// used here (q11 = q, q12 = q21 = q^-1, q22 = -q).
struct ChiVal {
  int sign;  // +1 or -1
  int exp;

  Scalar scalar() const {
    Scalar s = Scalar::q_pow(exp);
    if (sign < 0) s = -s;
    return s;
  }
};

// chi(a, b) = q11^(a1 b1) q12^(a1 b2) q21^(a2 b1) q22^(a2 b2)
//           = (-1)^(a2 b2) q^((a1 - a2)(b1 - b2))
inline ChiVal chi(Deg a, Deg b) {
  return {(a.a2 & b.a2 & 1) ? -1 : 1, (a.a1 - a.a2) * (b.a1 - b.a2)};
}

// General diagonal-braiding bicharacter over the scalar field; the default
// instance is the matrix above.  The packed chi() fast path must agree with
// it (asserted in tests).
struct Bicharacter {
  Scalar q11, q12, q21, q22;

  static Bicharacter standard() {
    Scalar q = Scalar::q_pow(1), qi = Scalar::q_pow(-1);
    return {q, qi, qi, -q};
  }

  Scalar value(Deg a, Deg b) const {
    return q11.pow((long)a.a1 * b.a1) * q12.pow((long)a.a1 * b.a2) *
           q21.pow((long)a.a2 * b.a1) * q22.pow((long)a.a2 * b.a2);
  }
};

}  // namespace nichols
