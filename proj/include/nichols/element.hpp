#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/bichar.hpp"
#include "nichols/scalar.hpp"
#include "nichols/word.hpp"

namespace nichols {

// Element of the free algebra T(V) on x1, x2: a sparse sum of words with
// scalar coefficients.  Terms are kept sorted by Word::key() with no zero
// coefficients; equal structure == equal element, so the representation is
// canonical.
struct FreeElement {
  std::vector<std::pair<Word, Scalar>> terms;

  static FreeElement zero() { return {}; }
  static FreeElement unit() { return single(Word::empty(), Scalar::one()); }
  static FreeElement generator(int i) {
    return single(Word::letter(i), Scalar::one());
  }
  static FreeElement from_word(Word w) { return single(w, Scalar::one()); }
  static FreeElement single(Word w, Scalar c);

  bool is_zero() const { return terms.empty(); }
  size_t size() const { return terms.size(); }

  // degree when homogeneous, nullopt otherwise
  std::optional<Deg> degree() const;
  bool is_homogeneous() const { return terms.empty() || degree().has_value(); }
  // split into homogeneous components, sweep order
  std::vector<std::pair<Deg, FreeElement>> components() const;

  Scalar coefficient(Word w) const;

  FreeElement operator-() const;
  FreeElement operator+(const FreeElement& o) const;
  FreeElement operator-(const FreeElement& o) const;
  FreeElement operator*(const FreeElement& o) const;
  FreeElement& operator+=(const FreeElement& o) { *this = *this + o; return *this; }
  FreeElement& operator-=(const FreeElement& o) { *this = *this - o; return *this; }
  FreeElement& operator*=(const FreeElement& o) { *this = *this * o; return *this; }

  FreeElement scaled(const Scalar& c) const;
  FreeElement pow(int k) const;

  bool operator==(const FreeElement& o) const { return terms == o.terms; }
  bool operator!=(const FreeElement& o) const { return !(*this == o); }
  int cmp_to(const FreeElement& o) const;
  bool operator<(const FreeElement& o) const { return cmp_to(o) < 0; }

  // text form: terms in ascending word-lex order, "c * x1 x2 x1"
  std::string text() const;
};

FreeElement operator*(const Scalar& c, const FreeElement& a);
FreeElement operator*(long n, const FreeElement& a);

// braided bracket [a, b] = ab - chi(deg a, deg b) ba, extended bilinearly
// over homogeneous components
FreeElement braided_bracket(const FreeElement& a, const FreeElement& b);
// anti-bracket {a, b} = ab + chi(deg a, deg b) ba
FreeElement anti_bracket(const FreeElement& a, const FreeElement& b);

// braided skew derivations (letter i = 1 or 2):
//   right: d_i(xy) = x d_i(y) + d_i(x) chi(alpha_i, deg y) y
//   left:  d_i(xy) = d_i(x) y + chi(deg x, alpha_i) x d_i(y)
FreeElement diff_right(int i, const FreeElement& a);
FreeElement diff_left(int i, const FreeElement& a);

// Element of T(V) (x) T(V) with the braided multiplication
// (a(x)b)(c(x)d) = chi(deg b, deg c) ac (x) bd.
struct TensorElement {
  // sorted by (left key, right key), no zero coefficients
  std::vector<std::pair<std::pair<Word, Word>, Scalar>> terms;

  static TensorElement zero() { return {}; }

  bool is_zero() const { return terms.empty(); }

  TensorElement operator-() const;
  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement operator*(const TensorElement& o) const;  // braided
  TensorElement& operator+=(const TensorElement& o) { *this = *this + o; return *this; }
  TensorElement& operator-=(const TensorElement& o) { *this = *this - o; return *this; }

  TensorElement scaled(const Scalar& c) const;

  // id (x) d_i (right skew derivation on the right leg, with no extra
  // braiding: it acts leg-wise)
  TensorElement diff_right_leg(int i) const;

  // collect the sub-sum whose left legs have the given degree
  TensorElement component_left(Deg d) const;
  std::vector<Deg> left_degrees() const;

  bool operator==(const TensorElement& o) const { return terms == o.terms; }

  std::string text() const;
};

TensorElement tensor(const FreeElement& a, const FreeElement& b);

// coproduct of the braided bialgebra T(V): Delta(x_i) = x_i(x)1 + 1(x)x_i,
// extended as a braided algebra map (subset expansion over each word)
TensorElement coproduct(const FreeElement& a);
// the part of coproduct(a) whose left legs have degree d (computed directly)
TensorElement coproduct_component(const FreeElement& a, Deg d);

}  // namespace nichols
