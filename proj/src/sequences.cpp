#include "nichols/sequences.hpp"

#include <cassert>
#include <mutex>
#include <deque>
#include <vector>

namespace nichols {

static std::mutex seq_mutex;

const Scalar& theta() {
  static const Scalar t = Scalar::q_pow(1) - Scalar::q_pow(-1);
  return t;
}

const Scalar& theta_prime() {
  static const Scalar t = Scalar::q_pow(1) + Scalar::q_pow(-1);
  return t;
}

Scalar qint(int n) {
  assert(n >= 0);
  Scalar s;
  for (int e = 1 - n; e <= n - 1; e += 2) s.num.push_back({e, GRat(1)});
  return s;
}

const Scalar& pseq(int n) {
  assert(n >= 0);
  std::lock_guard<std::mutex> lock(seq_mutex);
  static std::deque<Scalar> memo{Scalar::one()};
  while ((int)memo.size() <= n) {
    int m = (int)memo.size();
    Scalar s = Scalar::q_pow(m) + Scalar::q_pow(m - 1);
    s += (m % 2 == 1 ? memo[m - 1] : -memo[m - 1]);
    memo.push_back(s);
  }
  return memo[n];
}

const Scalar& qseq(int n) {
  assert(n >= 0);
  std::lock_guard<std::mutex> lock(seq_mutex);
  static std::deque<Scalar> memo{Scalar::one()};
  while ((int)memo.size() <= n) {
    int m = (int)memo.size();
    Scalar s = Scalar::q_pow(m) - Scalar::q_pow(m - 1);
    s += (m % 2 == 0 ? memo[m - 1] : -memo[m - 1]);
    memo.push_back(s);
  }
  return memo[n];
}

const Scalar& aseq(int n) {
  assert(n >= 0);
  std::lock_guard<std::mutex> lock(seq_mutex);
  static std::deque<Scalar> memo{Scalar::zero(), Scalar::one(),
                                  Scalar::frac(1, 2) * theta()};
  while ((int)memo.size() <= n) {
    int m = (int)memo.size();
    memo.push_back(Scalar::frac(1, 2) * theta() * memo[m - 1] +
                   Scalar::frac(1, 4) * memo[m - 2]);
  }
  return memo[n];
}

// ---- truncated scalar power series in u (index = exponent) ----

using SSeries = std::vector<Scalar>;

static SSeries smul(const SSeries& a, const SSeries& b, int order) {
  SSeries r(order + 1);
  for (int i = 0; i <= order && i < (int)a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order && j < (int)b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

// exp of a series with zero constant term
static SSeries sexp(const SSeries& s, int order) {
  assert(s.empty() || s[0].is_zero());
  SSeries r(order + 1), inc(order + 1);
  r[0] = inc[0] = Scalar::one();
  for (int j = 1; j <= order; ++j) {
    inc = smul(inc, s, order);
    Scalar invj = Scalar::one() / Scalar::from_int(j);
    bool all_zero = true;
    for (int k = 0; k <= order; ++k) {
      inc[k] *= invj;
      if (!inc[k].is_zero()) {
        r[k] += inc[k];
        all_zero = false;
      }
    }
    if (all_zero) break;
  }
  return r;
}

const Scalar& rseq(int k) {
  assert(k >= 1);
  std::lock_guard<std::mutex> lock(seq_mutex);
  static std::deque<Scalar> memo{Scalar::zero()};  // memo[0] unused
  while ((int)memo.size() <= k) {
    int kk = (int)memo.size();
    SSeries s(2 * kk - 1);
    for (int n = 1; n < kk; ++n) s[2 * n] = theta() * memo[n];
    SSeries e = sexp(s, 2 * kk);
    Scalar half_theta = Scalar::frac(1, 2) * theta();
    Scalar rhs = half_theta * e[2 * kk - 2] - e[2 * kk];
    if (kk == 1) rhs += half_theta;
    if (2 * kk - 4 >= 0) {
      Scalar c = e[2 * kk - 4];
      if (2 * kk - 4 == 0) c -= Scalar::one();
      rhs += Scalar::frac(1, 4) * c;
    }
    memo.push_back(rhs / theta());
  }
  return memo[k];
}

}  // namespace nichols
