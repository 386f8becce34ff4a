#pragma once

#include <map>
#include <string>

#include "nichols/element.hpp"

namespace nichols {

// Formal power series in a central variable u with FreeElement coefficients,
// truncated at u^order: every operation is exact modulo u^(order+1).
struct USeries {
  int order = 0;
  std::map<int, FreeElement> coeff;  // exponent -> nonzero coefficient

  static USeries zero(int order) { return {order, {}}; }
  static USeries constant(const Scalar& c, int order);

  FreeElement at(int k) const;
  void set(int k, FreeElement e);  // drops zeros and anything past order

  USeries truncated(int new_order) const;
  USeries scaled(const Scalar& c) const;

  USeries operator+(const USeries& o) const;  // order = min of the two
  USeries operator-(const USeries& o) const;
  USeries operator*(const USeries& o) const;  // coefficients do not commute

  bool operator==(const USeries& o) const {
    return order == o.order && coeff == o.coeff;
  }
};

// braided bracket, coefficientwise convolution
USeries series_bracket(const USeries& a, const USeries& b);

// u -> i*u (coefficient k picks up i^k)
USeries substitute_iu(const USeries& s);
// u -> alpha*u where only alpha^2 is known to live in the field: requires
// every nonzero exponent to be even, multiplies coefficient k by alpha_sq^(k/2)
USeries substitute_even(const USeries& s, const Scalar& alpha_sq);

// formal inverse functions; preconditions on the constant term are enforced
USeries series_exp(const USeries& s);     // s(0) = 0
USeries series_log(const USeries& s);     // s(0) = 1
USeries series_arctan(const USeries& s);  // s(0) = 0
// multiplicative inverse; the constant term must be a nonzero scalar
USeries series_inverse(const USeries& s);

// the named series:
//   Ltilde  sum theta*Ltilde(2n) u^(2n)            (constant term 1)
//   X       sum 2 theta M(2n+1)^2 u^(4n+2)
//   A       sum theta a(n+1) M(2n+1) u^(2n+1)
//   B       sum theta a(n)   M(2n+1) u^(2n+1)
//   Aprime  (1/i) A(iu),  Bprime  i B(iu)
USeries paper_series(const std::string& name, int order);

// log coefficients of the Ltilde series: the u^n coefficient of
// (1/theta) log(Ltilde(u)), n even >= 2
const FreeElement& bar_L(int n);
// arctan coefficients of the X series: the u^(2n) coefficient of
// (1/(2 theta)) arctan(X(u)), n odd
const FreeElement& overline_M_squared(int n);
// bar_L(n) corrected by the even log terms of X(alpha u), X(beta u)
// (alpha^2 = iq/2, beta^2 = i/(2q)), n a positive multiple of 4
const FreeElement& ring_L(int n);

}  // namespace nichols
