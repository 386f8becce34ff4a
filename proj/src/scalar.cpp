#include "nichols/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace nichols {

GRat GRat::operator/(const GRat& o) const {
  if (o.is_zero()) throw pole_error("division by zero in Q(i)");
  if (im == 0 && o.im == 0) return GRat(re / o.re);
  mpq_class n = o.norm();
  GRat t = *this * o.conj();
  return GRat(t.re / n, t.im / n);
}

static std::string rat_str(const mpq_class& v) { return v.get_str(); }

std::string GRat::str() const {
  if (is_zero()) return "0";
  if (im == 0) return rat_str(re);
  std::string imag;
  if (im == 1) imag = "i";
  else if (im == -1) imag = "-i";
  else imag = rat_str(im) + "*i";
  if (re == 0) return imag;
  std::string s = "(" + rat_str(re);
  if (imag[0] == '-') s += "-" + imag.substr(1);
  else s += "+" + imag;
  return s + ")";
}

// ---- dense polynomial helpers over Q(i) (index = exponent) ----

using Poly = std::vector<GRat>;

static void ptrim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}


static Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ptrim(r);
  return r;
}

// a -= c * q^k * b
static void psub_scaled(Poly& a, const GRat& c, size_t k, const Poly& b) {
  if (a.size() < b.size() + k) a.resize(b.size() + k);
  for (size_t j = 0; j < b.size(); ++j) a[j + k] -= c * b[j];
  ptrim(a);
}

static Poly pdiv_exact(const Poly& a, const Poly& b) {
  assert(!b.empty());
  Poly rem = a, quot;
  if (a.size() >= b.size()) quot.resize(a.size() - b.size() + 1);
  while (rem.size() >= b.size()) {
    size_t k = rem.size() - b.size();
    GRat c = rem.back() / b.back();
    quot[k] = c;
    psub_scaled(rem, c, k, b);
    if (rem.size() > k + b.size() - 1) rem.resize(k + b.size() - 1), ptrim(rem);
  }
  assert(rem.empty());
  ptrim(quot);
  return quot;
}

static void pmake_monic(Poly& p) {
  if (p.empty() || p.back().is_one()) return;
  GRat lc = p.back();
  for (auto& c : p) c = c / lc;
}

static Poly pgcd(Poly a, Poly b) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // remainder of a by b
    while (a.size() >= b.size()) {
      size_t k = a.size() - b.size();
      GRat c = a.back() / b.back();
      psub_scaled(a, c, k, b);
    }
    std::swap(a, b);
  }
  pmake_monic(a);
  if (a.empty()) a = {GRat(1)};
  return a;
}

static GRat peval(const Poly& p, const GRat& x) {
  GRat r;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// ---- Scalar ----

Scalar Scalar::from_int(long n) {
  Scalar s;
  if (n != 0) s.num.push_back({0, GRat(n)});
  return s;
}

Scalar Scalar::from_grat(GRat c) {
  Scalar s;
  if (!c.is_zero()) s.num.push_back({0, std::move(c)});
  return s;
}

Scalar Scalar::q_pow(int e) {
  Scalar s;
  s.num.push_back({e, GRat(1)});
  return s;
}

Scalar Scalar::term(GRat c, int e) {
  Scalar s;
  if (!c.is_zero()) s.num.push_back({e, std::move(c)});
  return s;
}

bool Scalar::is_one() const {
  return den_is_one() && num.size() == 1 && num[0].first == 0 && num[0].second.is_one();
}

bool Scalar::is_int(long n) const {
  if (n == 0) return is_zero();
  return den_is_one() && num.size() == 1 && num[0].first == 0 &&
         num[0].second == GRat(n);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& t : r.num) t.second = -t.second;
  return r;
}

void Scalar::scale_qpow(int sign, int shift) {
  for (auto& t : num) {
    t.first += shift;
    if (sign < 0) t.second = -t.second;
  }
}

// canonical reduction: clear gcd(num, den), keep den monic with den[0] != 0
static void reduce(Scalar& s) {
  if (s.num.empty()) {
    s.den = {GRat(1)};
    return;
  }
  if (!(s.den.size() == 1 && s.den[0].is_one())) {
    int m = s.num.front().first;
    Poly np(s.num.back().first - m + 1);
    for (auto& t : s.num) np[t.first - m] = t.second;
    Poly g = pgcd(np, s.den);
    if (g.size() > 1) {
      np = pdiv_exact(np, g);
      s.den = pdiv_exact(s.den, g);
    }
    if (!s.den.back().is_one()) {
      GRat lc = s.den.back();
      for (auto& c : s.den) c = c / lc;
      for (auto& c : np) c = c / lc;
    }
    s.num.clear();
    for (size_t i = 0; i < np.size(); ++i)
      if (!np[i].is_zero()) s.num.push_back({m + (int)i, np[i]});
    if (s.num.empty()) s.den = {GRat(1)};
  }
}

// merge two ascending sparse lists
static std::vector<std::pair<int, GRat>> merge_num(
    const std::vector<std::pair<int, GRat>>& a,
    const std::vector<std::pair<int, GRat>>& b) {
  std::vector<std::pair<int, GRat>> r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) r.push_back(a[i++]);
    else if (b[j].first < a[i].first) r.push_back(b[j++]);
    else {
      GRat c = a[i].second + b[j].second;
      if (!c.is_zero()) r.push_back({a[i].first, std::move(c)});
      ++i, ++j;
    }
  }
  while (i < a.size()) r.push_back(a[i++]);
  while (j < b.size()) r.push_back(b[j++]);
  return r;
}

static std::vector<std::pair<int, GRat>> conv(
    const std::vector<std::pair<int, GRat>>& a,
    const std::vector<std::pair<int, GRat>>& b) {
  std::map<int, GRat> acc;
  for (auto& s : a)
    for (auto& t : b) acc[s.first + t.first] += s.second * t.second;
  std::vector<std::pair<int, GRat>> r;
  for (auto& kv : acc)
    if (!kv.second.is_zero()) r.push_back({kv.first, kv.second});
  return r;
}

// sparse num times dense poly
static std::vector<std::pair<int, GRat>> conv_poly(
    const std::vector<std::pair<int, GRat>>& a, const Poly& p) {
  std::map<int, GRat> acc;
  for (auto& s : a)
    for (size_t k = 0; k < p.size(); ++k)
      if (!p[k].is_zero()) acc[s.first + (int)k] += s.second * p[k];
  std::vector<std::pair<int, GRat>> r;
  for (auto& kv : acc)
    if (!kv.second.is_zero()) r.push_back({kv.first, kv.second});
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  if (den == o.den) {
    r.num = merge_num(num, o.num);
    r.den = den;
    reduce(r);
    return r;
  }
  r.num = merge_num(conv_poly(num, o.den), conv_poly(o.num, den));
  r.den = pmul(den, o.den);
  reduce(r);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return zero();
  // fast path: scaling by c*q^k never disturbs coprimality
  if (o.num.size() == 1 && o.den_is_one()) {
    Scalar r = *this;
    for (auto& t : r.num) {
      t.first += o.num[0].first;
      t.second *= o.num[0].second;
    }
    return r;
  }
  if (num.size() == 1 && den_is_one()) return o * *this;
  Scalar r;
  r.num = conv(num, o.num);
  r.den = pmul(den, o.den);
  reduce(r);
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw pole_error("inverse of zero scalar");
  int m = num.front().first;
  Poly np(num.back().first - m + 1);
  for (auto& t : num) np[t.first - m] = t.second;
  Scalar r;
  // 1 / (q^m * np / den)  =  (den * q^-m) / np
  GRat lc = np.back();
  r.den.resize(np.size());
  for (size_t i = 0; i < np.size(); ++i) r.den[i] = np[i] / lc;
  r.num.clear();
  for (size_t i = 0; i < den.size(); ++i)
    if (!den[i].is_zero()) r.num.push_back({(int)i - m, den[i] / lc});
  // den had nonzero constant term, so r.num is nonempty; np's constant term
  // is nonzero by sparsity, so r.den keeps a nonzero constant term
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Scalar r = one(), b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

int Scalar::cmp_to(const Scalar& o) const {
  if (num.size() != o.num.size()) return num.size() < o.num.size() ? -1 : 1;
  for (size_t i = 0; i < num.size(); ++i) {
    if (num[i].first != o.num[i].first)
      return num[i].first < o.num[i].first ? -1 : 1;
    int c = num[i].second.cmp_to(o.num[i].second);
    if (c != 0) return c;
  }
  if (den.size() != o.den.size()) return den.size() < o.den.size() ? -1 : 1;
  for (size_t i = 0; i < den.size(); ++i) {
    int c = den[i].cmp_to(o.den[i]);
    if (c != 0) return c;
  }
  return 0;
}

GRat Scalar::eval(const GRat& q0) const {
  GRat dv = peval(den, q0);
  if (dv.is_zero()) throw pole_error("denominator vanishes at sample point");
  GRat nv;
  if (!num.empty() && num.front().first < 0 && q0.is_zero())
    throw pole_error("negative q-power at q = 0");
  // Horner over the sparse ascending list, from the top down
  for (size_t i = num.size(); i-- > 0;) {
    int gap = (i + 1 < num.size() ? num[i + 1].first : num.back().first) - num[i].first;
    for (int k = 0; k < gap; ++k) nv = nv * q0;
    nv += num[i].second;
  }
  if (!num.empty()) {
    int m = num.front().first;
    // multiply by q0^m (m may be negative)
    GRat p(1);
    GRat base = m >= 0 ? q0 : GRat(1) / q0;
    for (int k = 0; k < (m >= 0 ? m : -m); ++k) p *= base;
    nv *= p;
  }
  return nv / dv;
}

// ---- serialization ----

// one monomial c*q^e; sign handled by the caller via lead
static std::string term_str(const GRat& c, int e) {
  std::string base = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
  GRat a = c;
  std::string cs;
  if (a.is_real()) {
    if (!(a.re == 1) || e == 0) cs = rat_str(a.re);
  } else if (a.re == 0) {
    if (a.im == 1) cs = "i";
    else cs = rat_str(a.im) + "*i";
  } else {
    cs = a.str();
  }
  if (cs.empty()) return base;
  if (base.empty()) return cs;
  return cs + "*" + base;
}

// is c "negative" for display purposes (real or pure-imaginary only)
static bool display_negative(const GRat& c) {
  if (c.is_real()) return c.re < 0;
  if (c.re == 0) return c.im < 0;
  return false;
}

static std::string poly_str(const std::vector<std::pair<int, GRat>>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (size_t i = terms.size(); i-- > 0;) {  // descending exponent
    const auto& [e, c] = terms[i];
    bool neg = display_negative(c);
    GRat mag = neg ? -c : c;
    if (i + 1 == terms.size()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    s += term_str(mag, e);
  }
  return s;
}

std::string Scalar::text() const {
  if (num.empty()) return "0";
  // shift so both sides are ordinary polynomials
  int m = std::min(0, num.front().first);
  std::vector<std::pair<int, GRat>> n2;
  n2.reserve(num.size());
  for (auto& t : num) n2.push_back({t.first - m, t.second});
  if (den_is_one() && m == 0) return poly_str(n2);
  std::vector<std::pair<int, GRat>> d2;
  for (size_t i = 0; i < den.size(); ++i)
    if (!den[i].is_zero()) d2.push_back({(int)i - m, den[i]});
  if (d2.size() == 1 && d2[0].first == 0 && d2[0].second.is_one())
    return poly_str(n2);
  return "(" + poly_str(n2) + ")/(" + poly_str(d2) + ")";
}

std::string Scalar::json() const {
  int m = num.empty() ? 0 : std::min(0, num.front().first);
  std::ostringstream os;
  os << "{\"num\":[";
  for (size_t i = 0; i < num.size(); ++i) {
    if (i) os << ",";
    os << "[" << num[i].first - m << ",\"" << rat_str(num[i].second.re)
       << "\",\"" << rat_str(num[i].second.im) << "\"]";
  }
  os << "],\"den\":[";
  bool first = true;
  for (size_t i = 0; i < den.size(); ++i) {
    if (den[i].is_zero()) continue;
    if (!first) os << ",";
    first = false;
    os << "[" << (int)i - m << ",\"" << rat_str(den[i].re) << "\",\""
       << rat_str(den[i].im) << "\"]";
  }
  os << "]}";
  return os.str();
}

Scalar operator*(long n, const Scalar& s) { return Scalar::from_int(n) * s; }

}  // namespace nichols
