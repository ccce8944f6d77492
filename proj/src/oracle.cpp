#include "ckd3/oracle.hpp"

#include <algorithm>

namespace ckd3::oracle {

std::vector<Word> enumerate_codewords(const CheckTable& t) {
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(t.base()) * t.base());
    for (int r = 0; r < t.base(); ++r)
        for (int c = 0; c < t.base(); ++c) out.push_back({r, t.cell(r, c), c});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::array<int, 3> sorted_digits(Word w) {
    std::array<int, 3> d = {w.d1, w.d2, w.d3};
    std::sort(d.begin(), d.end());
    return d;
}

int positions_differing(Word x, Word y) {
    return (x.d1 != y.d1) + (x.d2 != y.d2) + (x.d3 != y.d3);
}

bool phonetic_right_pair(Word x, Word y, int base, PhoneticRange range) {
    const int lo = range == PhoneticRange::literal ? 2 : 0;
    for (int X = 2; X < base; ++X)
        for (int u = lo; u < base; ++u) {
            Word a{X, 0, u}, b{1, X, u};
            if ((x == a && y == b) || (x == b && y == a)) return true;
        }
    return false;
}

bool phonetic_left_pair(Word x, Word y, int base, PhoneticRange range) {
    const int lo = range == PhoneticRange::literal ? 2 : 0;
    for (int X = 2; X < base; ++X)
        for (int u = lo; u < base; ++u) {
            Word a{u, X, 0}, b{u, 1, X};
            if ((x == a && y == b) || (x == b && y == a)) return true;
        }
    return false;
}

bool related(Word x, Word y, ErrorClass cls, int base, PhoneticRange range) {
    switch (cls) {
        case ErrorClass::single:
            return positions_differing(x, y) == 1;
        case ErrorClass::adjacent_transposition:
            if (x.d1 != x.d2 && y.d1 == x.d2 && y.d2 == x.d1 && y.d3 == x.d3) return true;
            if (x.d2 != x.d3 && y.d1 == x.d1 && y.d2 == x.d3 && y.d3 == x.d2) return true;
            return false;
        case ErrorClass::twin:
            if (x.d1 == x.d2 && y.d1 == y.d2 && x.d3 == y.d3 && x.d1 != y.d1) return true;
            if (x.d2 == x.d3 && y.d2 == y.d3 && x.d1 == y.d1 && x.d2 != y.d2) return true;
            return false;
        case ErrorClass::jump_twin:
            return x.d1 == x.d3 && y.d1 == y.d3 && x.d2 == y.d2 && x.d1 != y.d1;
        case ErrorClass::jump_transposition:
            return x.d1 != x.d3 && y.d1 == x.d3 && y.d2 == x.d2 && y.d3 == x.d1;
        case ErrorClass::phonetic_right:
            return phonetic_right_pair(x, y, base, range);
        case ErrorClass::phonetic_left:
            return phonetic_left_pair(x, y, base, range);
        case ErrorClass::cyclic: {
            Word rx{x.d2, x.d3, x.d1};
            Word ry{y.d2, y.d3, y.d1};
            return rx == y || ry == x;
        }
        case ErrorClass::permutation:
            return sorted_digits(x) == sorted_digits(y);
        case ErrorClass::triple_error:
            return positions_differing(x, y) == 3;
    }
    return false;
}

}  // namespace

std::vector<WordPair> brute_undetected(const CheckTable& t, ErrorClass cls,
                                       PhoneticRange range) {
    const std::vector<Word> words = enumerate_codewords(t);
    std::vector<WordPair> out;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (related(words[i], words[j], cls, t.base(), range))
                out.push_back(make_word_pair(words[i], words[j]));
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::array<int, 3>, int> multiset_census(const CheckTable& t) {
    std::map<std::array<int, 3>, int> census;
    for (Word w : enumerate_codewords(t)) ++census[sorted_digits(w)];
    return census;
}

}  // namespace ckd3::oracle
