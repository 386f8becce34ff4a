#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nichols {

// Z^2 degree of a homogeneous element: a1 copies of x1, a2 of x2.
struct Deg {
  int a1 = 0, a2 = 0;

  int total() const { return a1 + a2; }
  Deg operator+(Deg o) const { return {a1 + o.a1, a2 + o.a2}; }
  Deg operator-(Deg o) const { return {a1 - o.a1, a2 - o.a2}; }
  bool operator==(Deg o) const { return a1 == o.a1 && a2 == o.a2; }
  bool operator!=(Deg o) const { return !(*this == o); }
  bool operator<(Deg o) const {  // sweep order: total ascending, ties by a1
    if (total() != o.total()) return total() < o.total();
    return a1 < o.a1;
  }
  bool fits_in(Deg o) const { return a1 <= o.a1 && a2 <= o.a2; }
  std::string str() const {
    return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
  }
};

// Word in the letters x1, x2, packed into bits: bit k = 1 when position k
// (counted from the left) holds x2.  Up to 64 letters.
struct Word {
  uint64_t bits = 0;
  uint8_t len = 0;

  static Word empty() { return {}; }
  static Word letter(int i) { return {i == 2 ? 1ull : 0ull, 1}; }
  // parse "1122", "x1x1x2x2" or empty
  static Word parse(const std::string& s);

  int at(int k) const { return (bits >> k) & 1 ? 2 : 1; }
  Deg degree() const {
    int ones = __builtin_popcountll(bits & mask());
    return {len - ones, ones};
  }
  uint64_t mask() const { return len == 64 ? ~0ull : (1ull << len) - 1; }

  Word concat(Word o) const {
    return {(bits & mask()) | (o.bits << len), (uint8_t)(len + o.len)};
  }
  Word erase(int k) const {
    uint64_t low = bits & ((1ull << k) - 1);
    uint64_t high = (bits >> (k + 1)) << k;
    return {low | high, (uint8_t)(len - 1)};
  }
  Word prefix(int k) const { return {bits & ((1ull << k) - 1), (uint8_t)k}; }
  Word suffix(int k) const {  // drop the first k letters
    return {bits >> k, (uint8_t)(len - k)};
  }

  bool operator==(Word o) const {
    return len == o.len && (bits & mask()) == (o.bits & o.mask());
  }
  bool operator!=(Word o) const { return !(*this == o); }

  // canonical container key: cheap integer compare (length, then bits)
  uint64_t key() const { return ((uint64_t)len << 56) | (bits & mask()); }

  std::string str() const {  // "1122"; empty word prints "()"
    if (len == 0) return "()";
    std::string s;
    for (int k = 0; k < len; ++k) s += char('0' + at(k));
    return s;
  }
};

// lex order with the prefix rule (u < uw): the superletter order
inline bool word_lex_less(Word a, Word b) {
  int n = a.len < b.len ? a.len : b.len;
  for (int k = 0; k < n; ++k) {
    int ca = a.at(k), cb = b.at(k);
    if (ca != cb) return ca < cb;
  }
  return a.len < b.len;
}

// all words of the given degree, ascending lex order
std::vector<Word> words_of_degree(Deg d);

}  // namespace nichols
