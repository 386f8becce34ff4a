#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nichols/scalar.hpp"
#include "nichols/sequences.hpp"

using namespace nichols;

namespace {

Scalar q() { return Scalar::q_pow(1); }

// random scalar built from a small expression pool, denominator-bearing
Scalar random_scalar(std::mt19937_64& rng, bool allow_zero = true) {
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4), pick(0, 5);
  Scalar s;
  int parts = 1 + (int)(rng() % 3);
  for (int k = 0; k < parts; ++k) {
    Scalar t = Scalar::term(GRat(c(rng)), e(rng));
    if (pick(rng) == 0) t = t * Scalar::imag_unit();
    if (pick(rng) <= 1) {
      Scalar d = Scalar::one() + Scalar::term(GRat(c(rng)), e(rng) + 4);
      if (!d.is_zero()) t = t / d;
    }
    s += t;
  }
  if (!allow_zero && s.is_zero()) s = Scalar::one();
  return s;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  GRat i = GRat::unit_i();
  CHECK(i * i == GRat(-1));
  CHECK((GRat(3) + i * GRat(2)) * (GRat(3) - i * GRat(2)) == GRat(13));
  CHECK(GRat(1) / i == -i);
  GRat z = GRat::frac(3, 2) + i * GRat::frac(-1, 3);
  CHECK(z / z == GRat(1));
  CHECK(z.str() == "(3/2-1/3*i)");
  CHECK(i.str() == "i");
  CHECK((-i).str() == "-i");
  CHECK(GRat::frac(-6, 4).str() == "-3/2");
}

TEST_CASE("scalar canonical form and arithmetic") {
  Scalar th = theta();
  CHECK(th.text() == "(q^2 - 1)/(q)");
  CHECK((q() - Scalar::one()).text() == "q - 1");
  CHECK(Scalar::zero().text() == "0");
  CHECK(qint(3).text() == "(q^4 + q^2 + 1)/(q^2)");

  // cancellation: (q^2 - 1)/(q - 1) reduces to q + 1
  Scalar r = (q() * q() - Scalar::one()) / (q() - Scalar::one());
  CHECK(r == q() + Scalar::one());
  CHECK(r.text() == "q + 1");

  CHECK(th * th.inv() == Scalar::one());
  CHECK(th.pow(3) == th * th * th);
  CHECK(th.pow(-2) * th.pow(2) == Scalar::one());
  CHECK((th - th).is_zero());

  // denominators stay monic with nonzero constant term
  Scalar s = Scalar::one() / (Scalar::from_int(2) * q() - Scalar::from_int(2));
  CHECK(s.den.back().is_one());
  CHECK(!s.den[0].is_zero());
}

TEST_CASE("scalar field laws on random elements") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Scalar::zero() == a);
    CHECK(a * Scalar::one() == a);
    if (!a.is_zero()) {
      CHECK(a * a.inv() == Scalar::one());
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("scalar evaluation") {
  GRat two(2);
  CHECK(theta().eval(two) == GRat::frac(3, 2));
  CHECK(qint(3).eval(two) == GRat::frac(21, 4));
  Scalar pole = Scalar::one() / (q() - Scalar::one());
  CHECK_THROWS_AS(pole.eval(GRat(1)), pole_error);
  // i evaluates to i
  CHECK(Scalar::imag_unit().eval(two) == GRat::unit_i());
  // evaluation is a ring homomorphism at random points
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    GRat x = GRat::frac(2 + (int)(rng() % 7), 1 + (int)(rng() % 5));
    try {
      GRat lhs = (a * b + a).eval(x);
      CHECK(lhs == a.eval(x) * b.eval(x) + a.eval(x));
    } catch (const pole_error&) {
      // a random denominator may vanish; nothing to assert then
    }
  }
}

TEST_CASE("scalar serialization") {
  CHECK(theta().json() ==
        "{\"num\":[[0,\"-1\",\"0\"],[2,\"1\",\"0\"]],\"den\":[[1,\"1\",\"0\"]]}");
  CHECK(Scalar::zero().json() == "{\"num\":[],\"den\":[[0,\"1\",\"0\"]]}");
  Scalar s = Scalar::imag_unit() * q() * q() - Scalar::frac(1, 2);
  CHECK(s.text() == "i*q^2 - 1/2");
}

TEST_CASE("theta and qint identities") {
  CHECK(theta() * theta_prime() == Scalar::q_pow(2) - Scalar::q_pow(-2));
  CHECK(qint(1) == Scalar::one());
  CHECK(qint(2) == theta_prime());
  for (int n = 2; n <= 8; ++n)
    CHECK(qint(n) == theta_prime() * qint(n - 1) - qint(n - 2));
}

TEST_CASE("P and Q ladder sequences") {
  CHECK(pseq(0).is_one());
  CHECK(pseq(1) == q() + Scalar::from_int(2));
  CHECK(qseq(1) == q() - Scalar::from_int(2));
  CHECK(pseq(2) == q() * q() - Scalar::from_int(2));
  CHECK(qseq(2) == pseq(2));
  // closed forms, frozen oracles
  for (int n = 1; n <= 12; ++n) {
    int h = n / 2;
    Scalar common = Scalar::from_int(2) * Scalar::q_pow(2 * h) *
                    (Scalar::one() - (-Scalar::q_pow(-2)).pow(h + 1)) /
                    (Scalar::one() + Scalar::q_pow(-2));
    Scalar sign_top = (n % 2 == 0) ? -Scalar::q_pow(n) : Scalar::q_pow(n);
    CHECK(pseq(n) == common + sign_top);
    Scalar qcommon = (n % 2 == 0) ? common : -common;
    CHECK(qseq(n) == qcommon + sign_top);
    // even entries agree
    if (n % 2 == 0) CHECK(pseq(n) == qseq(n));
  }
}

TEST_CASE("a-sequence") {
  CHECK(aseq(1).is_one());
  CHECK(aseq(2) == Scalar::frac(1, 2) * theta());
  CHECK(aseq(3) == Scalar::frac(1, 4) *
                       (q() * q() - Scalar::one() + Scalar::q_pow(-2)));
  // closed form a_n = ((q/2)^n - (-1/(2q))^n) / ((q + 1/q)/2)
  for (int n = 0; n <= 10; ++n) {
    Scalar half_q = Scalar::frac(1, 2) * q();
    Scalar neg_half_qinv = Scalar::frac(-1, 2) * Scalar::q_pow(-1);
    Scalar closed = (half_q.pow(n) - neg_half_qinv.pow(n)) /
                    (Scalar::frac(1, 2) * theta_prime());
    CHECK(aseq(n) == closed);
  }
}

TEST_CASE("R-sequence from the series recursion") {
  CHECK(rseq(1) == Scalar::one());
  CHECK(rseq(2).is_zero());
  CHECK(rseq(3) == qint(3) / Scalar::from_int(12));
  // closed form: R_(4k) = 0, R_(4k+2) = [2k+1]_q / (2^(2k) (2k+1))
  for (int k = 1; k <= 5; ++k) {
    if (k % 2 == 0) {
      CHECK(rseq(k).is_zero());
    } else {
      int kk = (k - 1) / 2;
      Scalar expect = qint(2 * kk + 1) /
                      (Scalar::from_int(2).pow(2 * kk) * Scalar::from_int(2 * kk + 1));
      CHECK(rseq(k) == expect);
    }
  }
}
