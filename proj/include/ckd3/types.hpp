#pragma once

#include <compare>
#include <string>

namespace ckd3 {

/// One transmitted codeword: the digits at positions 1, 2, 3.
struct Word {
    int d1 = 0;
    int d2 = 0;
    int d3 = 0;

    friend auto operator<=>(const Word&, const Word&) = default;
};

/// The same value viewed as an orthogonal-array entry (row, symbol, column).
/// A codeword (r,s,c) and the triple (r,s,c) are the same object.
struct Triple {
    int r = 0;
    int s = 0;
    int c = 0;

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

constexpr Triple as_triple(Word w) { return {w.d1, w.d2, w.d3}; }
constexpr Word as_word(Triple t) { return {t.r, t.s, t.c}; }

/// Unordered codeword pair, stored normalized (a <= b).
struct WordPair {
    Word a;
    Word b;

    friend auto operator<=>(const WordPair&, const WordPair&) = default;
};

constexpr WordPair make_word_pair(Word x, Word y) {
    return x <= y ? WordPair{x, y} : WordPair{y, x};
}

/// Digits concatenated, e.g. (7,9,2) -> "792".
std::string to_string(Word w);
std::string to_string(Triple t);

}  // namespace ckd3
