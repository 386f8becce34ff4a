#include "nichols/modp.hpp"

#include <cassert>

namespace nichols {
namespace fp {

uint64_t pow(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  b %= prime();
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

static uint64_t powmod_n(uint64_t b, uint64_t e, uint64_t n) {
  uint64_t r = 1;
  b %= n;
  while (e) {
    if (e & 1) r = (uint64_t)((__uint128_t)r * b % n);
    b = (uint64_t)((__uint128_t)b * b % n);
    e >>= 1;
  }
  return r;
}

// deterministic for all 64-bit integers with this witness set
bool miller_rabin(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = powmod_n(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = (uint64_t)((__uint128_t)x * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t prime() {
  static const uint64_t p = [] {
    uint64_t c = (1ull << 62) + 1;  // 1 mod 4
    while (!miller_rabin(c)) c += 4;
    return c;
  }();
  return p;
}

uint64_t imag_unit() {
  static const uint64_t r = [] {
    uint64_t p = prime();
    for (uint64_t g = 2;; ++g) {
      if (pow(g, (p - 1) / 2) == p - 1) {  // non-residue
        uint64_t i = pow(g, (p - 1) / 4);
        assert(mul(i, i) == p - 1);
        return i;
      }
    }
  }();
  return r;
}

}  // namespace fp

static std::optional<uint64_t> rat_mod(const mpq_class& v) {
  uint64_t p = fp::prime();
  uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), p);
  if (den == 0) return std::nullopt;
  uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), p);
  return fp::mul(num, fp::inv(den));
}

std::optional<uint64_t> grat_mod(const GRat& c) {
  auto re = rat_mod(c.re);
  if (!re) return std::nullopt;
  if (c.im == 0) return re;
  auto im = rat_mod(c.im);
  if (!im) return std::nullopt;
  return fp::add(*re, fp::mul(*im, fp::imag_unit()));
}

PointCtx PointCtx::make(uint64_t num, uint64_t den) {
  PointCtx pt;
  pt.num = num;
  pt.den = den;
  pt.q0p = fp::mul(num % fp::prime(), fp::inv(den % fp::prime()));
  uint64_t qinv = fp::inv(pt.q0p);
  pt.powers[127] = 1;
  for (int e = 1; e <= 127; ++e) {
    pt.powers[127 + e] = fp::mul(pt.powers[127 + e - 1], pt.q0p);
    pt.powers[127 - e] = fp::mul(pt.powers[127 - e + 1], qinv);
  }
  return pt;
}

std::optional<uint64_t> scalar_eval_mod(const Scalar& s, const PointCtx& pt) {
  uint64_t num = 0;
  for (auto& [e, c] : s.num) {
    auto cm = grat_mod(c);
    if (!cm) return std::nullopt;
    assert(e >= -127 && e <= 127);
    num = fp::add(num, fp::mul(*cm, pt.q_pow(e)));
  }
  uint64_t den = 0;
  for (size_t k = s.den.size(); k-- > 0;) {
    auto cm = grat_mod(s.den[k]);
    if (!cm) return std::nullopt;
    den = fp::add(fp::mul(den, pt.q0p), *cm);
  }
  if (den == 0) return std::nullopt;
  return fp::mul(num, fp::inv(den));
}

int rank_mod(std::vector<std::vector<uint64_t>>& m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    uint64_t inv_p = fp::inv(m[r][c]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      uint64_t f = fp::mul(m[i][c], inv_p);
      for (size_t j = c; j < cols; ++j)
        m[i][j] = fp::sub(m[i][j], fp::mul(f, m[r][j]));
    }
    ++r;
  }
  return (int)r;
}

}  // namespace nichols
