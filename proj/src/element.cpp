#include "nichols/element.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace nichols {

Word Word::parse(const std::string& s) {
  Word w;
  for (size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == 'x' || c == ' ') continue;
    assert(c == '1' || c == '2');
    if (c == '2') w.bits |= 1ull << w.len;
    ++w.len;
  }
  return w;
}

static void gen_words(Deg left, Word cur, std::vector<Word>& out) {
  if (left.a1 == 0 && left.a2 == 0) {
    out.push_back(cur);
    return;
  }
  if (left.a1 > 0) gen_words({left.a1 - 1, left.a2}, cur.concat(Word::letter(1)), out);
  if (left.a2 > 0) gen_words({left.a1, left.a2 - 1}, cur.concat(Word::letter(2)), out);
}

std::vector<Word> words_of_degree(Deg d) {
  std::vector<Word> out;
  gen_words(d, Word::empty(), out);
  return out;
}

// ---- FreeElement ----

using Term = std::pair<Word, Scalar>;

static void normalize(std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return a.first.key() < b.first.key(); });
  size_t out = 0;
  for (size_t i = 0; i < ts.size();) {
    Word w = ts[i].first;
    Scalar c = std::move(ts[i].second);
    for (++i; i < ts.size() && ts[i].first == w; ++i) c += ts[i].second;
    if (!c.is_zero()) ts[out++] = {w, std::move(c)};
  }
  ts.resize(out);
}

FreeElement FreeElement::single(Word w, Scalar c) {
  FreeElement e;
  if (!c.is_zero()) e.terms.push_back({w, std::move(c)});
  return e;
}

std::optional<Deg> FreeElement::degree() const {
  if (terms.empty()) return Deg{0, 0};
  Deg d = terms[0].first.degree();
  for (auto& t : terms)
    if (t.first.degree() != d) return std::nullopt;
  return d;
}

std::vector<std::pair<Deg, FreeElement>> FreeElement::components() const {
  std::map<Deg, FreeElement> groups;
  for (auto& t : terms) groups[t.first.degree()].terms.push_back(t);
  std::vector<std::pair<Deg, FreeElement>> out;
  for (auto& kv : groups) {
    normalize(kv.second.terms);  // already sorted, but harmless
    out.push_back({kv.first, std::move(kv.second)});
  }
  return out;
}

Scalar FreeElement::coefficient(Word w) const {
  uint64_t k = w.key();
  auto it = std::lower_bound(
      terms.begin(), terms.end(), k,
      [](const Term& t, uint64_t key) { return t.first.key() < key; });
  if (it != terms.end() && it->first == w) return it->second;
  return Scalar::zero();
}

FreeElement FreeElement::operator-() const {
  FreeElement r = *this;
  for (auto& t : r.terms) t.second = -t.second;
  return r;
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
  FreeElement r;
  r.terms.reserve(terms.size() + o.terms.size());
  size_t i = 0, j = 0;
  while (i < terms.size() && j < o.terms.size()) {
    uint64_t ki = terms[i].first.key(), kj = o.terms[j].first.key();
    if (ki < kj) r.terms.push_back(terms[i++]);
    else if (kj < ki) r.terms.push_back(o.terms[j++]);
    else {
      Scalar c = terms[i].second + o.terms[j].second;
      if (!c.is_zero()) r.terms.push_back({terms[i].first, std::move(c)});
      ++i, ++j;
    }
  }
  while (i < terms.size()) r.terms.push_back(terms[i++]);
  while (j < o.terms.size()) r.terms.push_back(o.terms[j++]);
  return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const { return *this + (-o); }

FreeElement FreeElement::operator*(const FreeElement& o) const {
  FreeElement r;
  r.terms.reserve(terms.size() * o.terms.size());
  for (auto& s : terms)
    for (auto& t : o.terms)
      r.terms.push_back({s.first.concat(t.first), s.second * t.second});
  normalize(r.terms);
  return r;
}

FreeElement FreeElement::scaled(const Scalar& c) const {
  if (c.is_zero()) return zero();
  FreeElement r = *this;
  for (auto& t : r.terms) t.second *= c;
  return r;
}

FreeElement FreeElement::pow(int k) const {
  assert(k >= 0);
  FreeElement r = unit();
  for (int j = 0; j < k; ++j) r *= *this;
  return r;
}

int FreeElement::cmp_to(const FreeElement& o) const {
  if (terms.size() != o.terms.size())
    return terms.size() < o.terms.size() ? -1 : 1;
  for (size_t i = 0; i < terms.size(); ++i) {
    uint64_t ka = terms[i].first.key(), kb = o.terms[i].first.key();
    if (ka != kb) return ka < kb ? -1 : 1;
    int c = terms[i].second.cmp_to(o.terms[i].second);
    if (c != 0) return c;
  }
  return 0;
}

FreeElement operator*(const Scalar& c, const FreeElement& a) { return a.scaled(c); }
FreeElement operator*(long n, const FreeElement& a) {
  return a.scaled(Scalar::from_int(n));
}

FreeElement braided_bracket(const FreeElement& a, const FreeElement& b) {
  FreeElement r = a * b;
  for (auto& [da, ca] : a.components())
    for (auto& [db, cb] : b.components()) {
      ChiVal x = chi(da, db);
      FreeElement ba = cb * ca;
      for (auto& t : ba.terms) t.second.scale_qpow(-x.sign, x.exp);
      r += ba;
    }
  return r;
}

FreeElement anti_bracket(const FreeElement& a, const FreeElement& b) {
  FreeElement r = a * b;
  for (auto& [da, ca] : a.components())
    for (auto& [db, cb] : b.components()) {
      ChiVal x = chi(da, db);
      FreeElement ba = cb * ca;
      for (auto& t : ba.terms) t.second.scale_qpow(x.sign, x.exp);
      r += ba;
    }
  return r;
}

FreeElement diff_right(int i, const FreeElement& a) {
  std::vector<Term> out;
  for (auto& [w, c] : a.terms) {
    Deg suff{0, 0};
    for (int k = w.len - 1; k >= 0; --k) {
      if (w.at(k) == i) {
        ChiVal x = chi(i == 1 ? Deg{1, 0} : Deg{0, 1}, suff);
        Scalar cc = c;
        cc.scale_qpow(x.sign, x.exp);
        out.push_back({w.erase(k), std::move(cc)});
      }
      if (w.at(k) == 1) ++suff.a1;
      else ++suff.a2;
    }
  }
  FreeElement r;
  r.terms = std::move(out);
  normalize(r.terms);
  return r;
}

FreeElement diff_left(int i, const FreeElement& a) {
  std::vector<Term> out;
  for (auto& [w, c] : a.terms) {
    Deg pref{0, 0};
    for (int k = 0; k < w.len; ++k) {
      if (w.at(k) == i) {
        ChiVal x = chi(pref, i == 1 ? Deg{1, 0} : Deg{0, 1});
        Scalar cc = c;
        cc.scale_qpow(x.sign, x.exp);
        out.push_back({w.erase(k), std::move(cc)});
      }
      if (w.at(k) == 1) ++pref.a1;
      else ++pref.a2;
    }
  }
  FreeElement r;
  r.terms = std::move(out);
  normalize(r.terms);
  return r;
}

// ---- TensorElement ----

using TTerm = std::pair<std::pair<Word, Word>, Scalar>;

static std::pair<uint64_t, uint64_t> tkey(const TTerm& t) {
  return {t.first.first.key(), t.first.second.key()};
}

static void tnormalize(std::vector<TTerm>& ts) {
  std::sort(ts.begin(), ts.end(),
            [](const TTerm& a, const TTerm& b) { return tkey(a) < tkey(b); });
  size_t out = 0;
  for (size_t i = 0; i < ts.size();) {
    auto w = ts[i].first;
    Scalar c = std::move(ts[i].second);
    for (++i; i < ts.size() && ts[i].first == w; ++i) c += ts[i].second;
    if (!c.is_zero()) ts[out++] = {w, std::move(c)};
  }
  ts.resize(out);
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto& t : r.terms) t.second = -t.second;
  return r;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement r;
  r.terms.reserve(terms.size() + o.terms.size());
  size_t i = 0, j = 0;
  while (i < terms.size() && j < o.terms.size()) {
    auto ki = tkey(terms[i]), kj = tkey(o.terms[j]);
    if (ki < kj) r.terms.push_back(terms[i++]);
    else if (kj < ki) r.terms.push_back(o.terms[j++]);
    else {
      Scalar c = terms[i].second + o.terms[j].second;
      if (!c.is_zero()) r.terms.push_back({terms[i].first, std::move(c)});
      ++i, ++j;
    }
  }
  while (i < terms.size()) r.terms.push_back(terms[i++]);
  while (j < o.terms.size()) r.terms.push_back(o.terms[j++]);
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  return *this + (-o);
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
  TensorElement r;
  r.terms.reserve(terms.size() * o.terms.size());
  for (auto& s : terms)
    for (auto& t : o.terms) {
      ChiVal x = chi(s.first.second.degree(), t.first.first.degree());
      Scalar c = s.second * t.second;
      c.scale_qpow(x.sign, x.exp);
      r.terms.push_back({{s.first.first.concat(t.first.first),
                          s.first.second.concat(t.first.second)},
                         std::move(c)});
    }
  tnormalize(r.terms);
  return r;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
  if (c.is_zero()) return zero();
  TensorElement r = *this;
  for (auto& t : r.terms) t.second *= c;
  return r;
}

TensorElement TensorElement::diff_right_leg(int i) const {
  std::vector<TTerm> out;
  for (auto& [ws, c] : terms) {
    Word w = ws.second;
    Deg suff{0, 0};
    for (int k = w.len - 1; k >= 0; --k) {
      if (w.at(k) == i) {
        ChiVal x = chi(i == 1 ? Deg{1, 0} : Deg{0, 1}, suff);
        Scalar cc = c;
        cc.scale_qpow(x.sign, x.exp);
        out.push_back({{ws.first, w.erase(k)}, std::move(cc)});
      }
      if (w.at(k) == 1) ++suff.a1;
      else ++suff.a2;
    }
  }
  TensorElement r;
  r.terms = std::move(out);
  tnormalize(r.terms);
  return r;
}

TensorElement TensorElement::component_left(Deg d) const {
  TensorElement r;
  for (auto& t : terms)
    if (t.first.first.degree() == d) r.terms.push_back(t);
  return r;
}

std::vector<Deg> TensorElement::left_degrees() const {
  std::map<Deg, bool> seen;
  for (auto& t : terms) seen[t.first.first.degree()] = true;
  std::vector<Deg> out;
  for (auto& kv : seen) out.push_back(kv.first);
  return out;
}

TensorElement tensor(const FreeElement& a, const FreeElement& b) {
  TensorElement r;
  r.terms.reserve(a.terms.size() * b.terms.size());
  for (auto& s : a.terms)
    for (auto& t : b.terms)
      r.terms.push_back({{s.first, t.first}, s.second * t.second});
  tnormalize(r.terms);
  return r;
}

// subset expansion of Delta on one word: each position goes left or right;
// a letter going left crosses the right-sent letters before it, picking up
// chi(deg of those letters, its own letter degree)
static void coproduct_word(Word w, const Scalar& c, std::vector<TTerm>& out) {
  int n = w.len;
  for (uint64_t s = 0; s < (1ull << n); ++s) {
    Word left, right;
    int sign = 1, exp = 0;
    Deg rdeg{0, 0};
    for (int k = 0; k < n; ++k) {
      int letter = w.at(k);
      if (s >> k & 1) {
        ChiVal x = chi(rdeg, letter == 1 ? Deg{1, 0} : Deg{0, 1});
        sign *= x.sign;
        exp += x.exp;
        left = left.concat(Word::letter(letter));
      } else {
        right = right.concat(Word::letter(letter));
        if (letter == 1) ++rdeg.a1;
        else ++rdeg.a2;
      }
    }
    Scalar cc = c;
    cc.scale_qpow(sign, exp);
    out.push_back({{left, right}, std::move(cc)});
  }
}

TensorElement coproduct(const FreeElement& a) {
  std::vector<TTerm> out;
  for (auto& [w, c] : a.terms) coproduct_word(w, c, out);
  TensorElement r;
  r.terms = std::move(out);
  tnormalize(r.terms);
  return r;
}

// enumerate k-subsets of positions[0..m) into chosen, invoking f on each
template <class F>
static void combos(const std::vector<int>& positions, int k, size_t from,
                   std::vector<int>& chosen, F&& f) {
  if (k == 0) {
    f(chosen);
    return;
  }
  for (size_t i = from; i + k <= positions.size(); ++i) {
    chosen.push_back(positions[i]);
    combos(positions, k - 1, i + 1, chosen, f);
    chosen.pop_back();
  }
}

TensorElement coproduct_component(const FreeElement& a, Deg d) {
  std::vector<TTerm> out;
  for (auto& [w, c] : a.terms) {
    Deg wd = w.degree();
    if (!d.fits_in(wd)) continue;
    std::vector<int> p1, p2;
    for (int k = 0; k < w.len; ++k) (w.at(k) == 1 ? p1 : p2).push_back(k);
    if (d.a1 > (int)p1.size() || d.a2 > (int)p2.size()) continue;
    std::vector<int> c1, c2;
    const Scalar& cref = c;
    Word ww = w;
    combos(p1, d.a1, 0, c1, [&](const std::vector<int>& s1) {
      combos(p2, d.a2, 0, c2, [&](const std::vector<int>& s2) {
        uint64_t s = 0;
        for (int k : s1) s |= 1ull << k;
        for (int k : s2) s |= 1ull << k;
        Word left, right;
        int sign = 1, exp = 0;
        Deg rdeg{0, 0};
        for (int k = 0; k < ww.len; ++k) {
          int letter = ww.at(k);
          if (s >> k & 1) {
            ChiVal x = chi(rdeg, letter == 1 ? Deg{1, 0} : Deg{0, 1});
            sign *= x.sign;
            exp += x.exp;
            left = left.concat(Word::letter(letter));
          } else {
            right = right.concat(Word::letter(letter));
            if (letter == 1) ++rdeg.a1;
            else ++rdeg.a2;
          }
        }
        Scalar cc = cref;
        cc.scale_qpow(sign, exp);
        out.push_back({{left, right}, std::move(cc)});
      });
    });
  }
  TensorElement r;
  r.terms = std::move(out);
  tnormalize(r.terms);
  return r;
}

// ---- text forms ----

static bool scalar_needs_paren(const std::string& s) {
  return s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
}

static std::string coeff_str(const Scalar& c) {
  std::string s = c.text();
  return scalar_needs_paren(s) ? "(" + s + ")" : s;
}

static std::string word_letters(Word w) {
  std::string s;
  for (int k = 0; k < w.len; ++k) {
    if (k) s += " ";
    s += w.at(k) == 1 ? "x1" : "x2";
  }
  return s;
}

std::string FreeElement::text() const {
  if (terms.empty()) return "0";
  std::vector<Term> ts = terms;
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    return word_lex_less(a.first, b.first);
  });
  std::string s;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i) s += " + ";
    if (ts[i].first.len == 0) s += coeff_str(ts[i].second);
    else s += coeff_str(ts[i].second) + " * " + word_letters(ts[i].first);
  }
  return s;
}

std::string TensorElement::text() const {
  if (terms.empty()) return "0";
  std::vector<TTerm> ts = terms;
  std::sort(ts.begin(), ts.end(), [](const TTerm& a, const TTerm& b) {
    if (a.first.first != b.first.first)
      return word_lex_less(a.first.first, b.first.first);
    return word_lex_less(a.first.second, b.first.second);
  });
  std::string s;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i) s += " + ";
    s += coeff_str(ts[i].second) + " * [" + ts[i].first.first.str() + " (x) " +
         ts[i].first.second.str() + "]";
  }
  return s;
}

}  // namespace nichols
