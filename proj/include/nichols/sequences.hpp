#pragma once

#include "nichols/scalar.hpp"

namespace nichols {

// Recurring scalar constants and integer-indexed scalar sequences.
// All results are memoized; everything is exact in Q(i)(q).

const Scalar& theta();        // q - q^-1
const Scalar& theta_prime();  // q + q^-1
Scalar qint(int n);           // [n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)

// P/Q ladders: P0 = Q0 = 1,
//   P_n = q^n + q^(n-1) + (-1)^(n-1) P_(n-1)
//   Q_n = q^n - q^(n-1) + (-1)^n     Q_(n-1)
const Scalar& pseq(int n);
const Scalar& qseq(int n);

// a_1 = 1, a_2 = theta/2, a_(n+2) = theta/2 a_(n+1) + 1/4 a_n; a_0 = 0
const Scalar& aseq(int n);

// R_(2k), k >= 1: the commutator coefficients produced by the logarithmic
// generating identity; computed by the truncated-series recursion
//   theta R_(2k) = [u^(2k-2)](theta/2) + [u^(2k-2)](theta/2 E)
//                + [u^(2k-4)](1/4 (E - 1)) - [u^(2k)] E,
//   E = exp(sum_(n<k) theta R_(2n) u^(2n)).
// Closed form (frozen as a test oracle): R_(4k) = 0,
// R_(4k+2) = [2k+1]_q / (2^(2k) (2k+1)).
const Scalar& rseq(int k);

}  // namespace nichols
