#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nichols/gaussian.hpp"

namespace nichols {

struct pole_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact element of Q(i)(q).
//
// Internally: a sparse Laurent-polynomial numerator (exponents may be
// negative, ascending, nonzero coefficients) over a denominator that is a
// monic ordinary polynomial with nonzero constant term.  Every power of q is
// folded into the numerator, so multiplying by c*q^k — the only coefficients
// the braiding ever produces — is a pure shift with no gcd work.  num and den
// are kept coprime; zero is the empty numerator with den = {1}.
//
// The serialized forms (text/json) present the equivalent pair of ordinary
// polynomials obtained by clearing the lowest exponent: internal (q - q^-1)
// prints as (q^2 - 1)/(q).
struct Scalar {
  std::vector<std::pair<int, GRat>> num;  // ascending exponent
  std::vector<GRat> den;                  // den[k] is the q^k coefficient

  Scalar() : den{GRat(1)} {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return from_int(1); }
  static Scalar from_int(long n);
  static Scalar from_grat(GRat c);
  static Scalar frac(long n, long d) { return from_grat(GRat::frac(n, d)); }
  static Scalar q_pow(int e);               // q^e (e may be negative)
  static Scalar term(GRat c, int e);        // c * q^e
  static Scalar imag_unit() { return from_grat(GRat::unit_i()); }

  bool is_zero() const { return num.empty(); }
  bool is_one() const;
  bool is_int(long n) const;
  bool den_is_one() const { return den.size() == 1 && den[0].is_one(); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
  Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

  Scalar inv() const;
  Scalar pow(long k) const;

  // in-place multiply by sign * q^shift (the braiding fast path)
  void scale_qpow(int sign, int shift);

  bool operator==(const Scalar& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  int cmp_to(const Scalar& o) const;
  bool operator<(const Scalar& o) const { return cmp_to(o) < 0; }

  // evaluation at q = q0; throws pole_error when the denominator vanishes
  // (or q0 = 0 meets a negative exponent)
  GRat eval(const GRat& q0) const;

  std::string text() const;
  std::string json() const;  // {"num":[[e,"re","im"],...],"den":[...]}
};

Scalar operator*(long n, const Scalar& s);

}  // namespace nichols
