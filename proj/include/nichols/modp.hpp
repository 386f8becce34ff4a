#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "nichols/scalar.hpp"

namespace nichols {

// F_p arithmetic for one fixed 62-bit prime p = 1 (mod 4), located
// deterministically at first use and Miller-Rabin certified.  i is realized
// as an element of multiplicative order 4.
namespace fp {

uint64_t prime();
uint64_t imag_unit();

inline uint64_t add(uint64_t a, uint64_t b) {
  uint64_t p = prime();
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint64_t sub(uint64_t a, uint64_t b) {
  uint64_t p = prime();
  return a >= b ? a - b : a + p - b;
}
inline uint64_t neg(uint64_t a) { return a == 0 ? 0 : prime() - a; }
inline uint64_t mul(uint64_t a, uint64_t b) {
  return (uint64_t)((__uint128_t)a * b % prime());
}
uint64_t pow(uint64_t b, uint64_t e);
inline uint64_t inv(uint64_t a) { return pow(a, prime() - 2); }

bool miller_rabin(uint64_t n);

}  // namespace fp

// residue of an exact Gaussian rational; nullopt when a denominator is
// divisible by p
std::optional<uint64_t> grat_mod(const GRat& c);

// sample point q = num/den (reduced, 1 <= num, den <= 997, num != den),
// with a precomputed power table q^e for |e| <= 127
struct PointCtx {
  uint64_t num = 1, den = 1;
  uint64_t q0p = 1;
  std::array<uint64_t, 255> powers{};  // powers[127 + e] = q0p^e

  static PointCtx make(uint64_t num, uint64_t den);
  uint64_t q_pow(int e) const { return powers[127 + e]; }
};

// evaluate an exact scalar at the point, in F_p
std::optional<uint64_t> scalar_eval_mod(const Scalar& s, const PointCtx& pt);

// row-echelon rank; destroys the matrix
int rank_mod(std::vector<std::vector<uint64_t>>& m);

}  // namespace nichols
