#include "nichols/lyndon.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>

namespace nichols {

bool is_lyndon(Word w) {
  if (w.len == 0) return false;
  for (int s = 1; s < w.len; ++s)
    if (!word_lex_less(w, w.suffix(s))) return false;
  return true;
}

std::vector<Word> lyndon_words(Deg d) {
  std::vector<Word> out;
  int n = d.total();
  if (n <= 0 || d.a1 < 0 || d.a2 < 0) return out;
  // Duval: t is always Lyndon at the top of the loop, and the words arrive
  // in increasing lex order
  std::vector<int> t{1};
  for (;;) {
    if ((int)t.size() <= n) {
      int ones = 0;
      for (int c : t) ones += c == 2;
      if ((int)t.size() == n && ones == d.a2) {
        Word w;
        for (int c : t) w = w.concat(Word::letter(c));
        out.push_back(w);
      }
    }
    int m = t.size();
    while ((int)t.size() < n) t.push_back(t[t.size() - m]);
    while (!t.empty() && t.back() == 2) t.pop_back();
    if (t.empty()) break;
    t.back() = 2;
  }
  return out;
}

int shirshov_split(Word w) {
  assert(w.len >= 2);
  for (int s = 1; s < w.len; ++s)
    if (is_lyndon(w.suffix(s))) return s;
  assert(false);  // every word of length >= 2 has a Lyndon final letter
  return w.len - 1;
}

const FreeElement& superletter(Word w) {
  static std::mutex mu;
  static std::map<uint64_t, std::unique_ptr<FreeElement>> cache;
  assert(w.len >= 1);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(w.key());
    if (it != cache.end()) return *it->second;
  }
  FreeElement e;
  if (w.len == 1) {
    e = FreeElement::generator(w.at(0));
  } else {
    int s = shirshov_split(w);
    e = braided_bracket(superletter(w.prefix(s)), superletter(w.suffix(s)));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.emplace(w.key(), std::make_unique<FreeElement>(std::move(e)));
  (void)fresh;
  return *it->second;
}

}  // namespace nichols
