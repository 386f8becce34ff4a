#pragma once

#include <vector>

#include "nichols/element.hpp"
#include "nichols/word.hpp"

namespace nichols {

// w is Lyndon: nonempty and strictly smaller than each of its proper suffixes
bool is_lyndon(Word w);

// all Lyndon words of the degree, increasing lex order (Duval's algorithm)
std::vector<Word> lyndon_words(Deg d);

// split position s of a Lyndon word (len >= 2): suffix(s) is the longest
// proper Lyndon suffix, equivalently prefix(s) has minimal length; both
// halves are again Lyndon
int shirshov_split(Word w);

// the super-letter [w]: iterated braided bracket along the Shirshov
// splits, [w] = [[prefix], [suffix]], with [x_i] = x_i (memoized)
const FreeElement& superletter(Word w);

}  // namespace nichols
