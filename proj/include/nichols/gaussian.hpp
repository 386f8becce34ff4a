#pragma once

#include <gmpxx.h>
#include <string>
#include <utility>

namespace nichols {

// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
struct GRat {
  mpq_class re, im;

  GRat() : re(0), im(0) {}
  GRat(long r) : re(r), im(0) {}
  GRat(mpq_class r) : re(std::move(r)), im(0) {}
  GRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GRat unit_i() { return GRat(mpq_class(0), mpq_class(1)); }
  static GRat frac(long n, long d) {
    mpq_class v(n, d);
    v.canonicalize();
    return GRat(v);
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GRat operator-() const { return GRat(-re, -im); }
  GRat operator+(const GRat& o) const { return GRat(re + o.re, im + o.im); }
  GRat operator-(const GRat& o) const { return GRat(re - o.re, im - o.im); }
  GRat operator*(const GRat& o) const {
    if (im == 0 && o.im == 0) return GRat(re * o.re);
    return GRat(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GRat operator/(const GRat& o) const;
  GRat& operator+=(const GRat& o) { re += o.re; im += o.im; return *this; }
  GRat& operator-=(const GRat& o) { re -= o.re; im -= o.im; return *this; }
  GRat& operator*=(const GRat& o) { *this = *this * o; return *this; }

  GRat conj() const { return GRat(re, -im); }
  mpq_class norm() const { return re * re + im * im; }

  bool operator==(const GRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GRat& o) const { return !(*this == o); }

  // total order (content-based, for canonical containers)
  int cmp_to(const GRat& o) const {
    int c = cmp(re, o.re);
    if (c != 0) return c;
    return cmp(im, o.im);
  }
  bool operator<(const GRat& o) const { return cmp_to(o) < 0; }

  // canonical text: "3/2", "i", "-2*i", "(1-1/2*i)"
  std::string str() const;
};

}  // namespace nichols
