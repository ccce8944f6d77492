#include "ckd3/errors.hpp"

#include <algorithm>
#include <map>

#include "ckd3/triples.hpp"

namespace ckd3 {

std::string_view error_class_name(ErrorClass cls) {
    switch (cls) {
        case ErrorClass::single: return "single";
        case ErrorClass::adjacent_transposition: return "adjacent-transposition";
        case ErrorClass::twin: return "twin";
        case ErrorClass::jump_twin: return "jump-twin";
        case ErrorClass::jump_transposition: return "jump-transposition";
        case ErrorClass::phonetic_right: return "phonetic-right";
        case ErrorClass::phonetic_left: return "phonetic-left";
        case ErrorClass::cyclic: return "cyclic";
        case ErrorClass::permutation: return "permutation";
        case ErrorClass::triple_error: return "triple";
    }
    return "?";
}

std::optional<ErrorClass> error_class_from_name(std::string_view name) {
    for (ErrorClass cls : kAllErrorClasses)
        if (error_class_name(cls) == name) return cls;
    if (name == "triple-error") return ErrorClass::triple_error;
    return std::nullopt;
}

std::vector<Word> corruptions(ErrorClass cls, Word w, int base, PhoneticRange range) {
    std::vector<Word> out;
    const int lo = range == PhoneticRange::literal ? 2 : 0;
    switch (cls) {
        case ErrorClass::single:
            for (int v = 0; v < base; ++v) {
                if (v != w.d1) out.push_back({v, w.d2, w.d3});
                if (v != w.d2) out.push_back({w.d1, v, w.d3});
                if (v != w.d3) out.push_back({w.d1, w.d2, v});
            }
            break;
        case ErrorClass::adjacent_transposition:
            if (w.d1 != w.d2) out.push_back({w.d2, w.d1, w.d3});
            if (w.d2 != w.d3) out.push_back({w.d1, w.d3, w.d2});
            break;
        case ErrorClass::twin:
            if (w.d1 == w.d2)
                for (int b = 0; b < base; ++b)
                    if (b != w.d1) out.push_back({b, b, w.d3});
            if (w.d2 == w.d3)
                for (int b = 0; b < base; ++b)
                    if (b != w.d2) out.push_back({w.d1, b, b});
            break;
        case ErrorClass::jump_twin:
            if (w.d1 == w.d3)
                for (int c = 0; c < base; ++c)
                    if (c != w.d1) out.push_back({c, w.d2, c});
            break;
        case ErrorClass::jump_transposition:
            if (w.d1 != w.d3) out.push_back({w.d3, w.d2, w.d1});
            break;
        case ErrorClass::phonetic_right:
            if (w.d1 >= 2 && w.d2 == 0 && w.d3 >= lo) out.push_back({1, w.d1, w.d3});
            if (w.d1 == 1 && w.d2 >= 2 && w.d3 >= lo) out.push_back({w.d2, 0, w.d3});
            break;
        case ErrorClass::phonetic_left:
            if (w.d2 >= 2 && w.d3 == 0 && w.d1 >= lo) out.push_back({w.d1, 1, w.d2});
            if (w.d2 == 1 && w.d3 >= 2 && w.d1 >= lo) out.push_back({w.d1, w.d3, 0});
            break;
        case ErrorClass::cyclic: {
            Word rot{w.d2, w.d3, w.d1};
            if (rot != w) out.push_back(rot);
            break;
        }
        case ErrorClass::permutation: {
            const std::array<Word, 5> perms = {
                Word{w.d1, w.d3, w.d2}, Word{w.d2, w.d1, w.d3}, Word{w.d2, w.d3, w.d1},
                Word{w.d3, w.d1, w.d2}, Word{w.d3, w.d2, w.d1}};
            for (Word p : perms)
                if (p != w) out.push_back(p);
            break;
        }
        case ErrorClass::triple_error:
            for (int a = 0; a < base; ++a) {
                if (a == w.d1) continue;
                for (int b = 0; b < base; ++b) {
                    if (b == w.d2) continue;
                    for (int c = 0; c < base; ++c)
                        if (c != w.d3) out.push_back({a, b, c});
                }
            }
            break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DetectionReport detect(const CheckTable& t, ErrorClass cls, PhoneticRange range) {
    const int n = t.base();
    DetectionReport rep;
    rep.error_class = cls;
    rep.base = n;
    rep.words_examined = static_cast<long>(n) * n;

    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Word w{r, t.cell(r, c), c};
            for (Word bad : corruptions(cls, w, n, range))
                if (t.cell(bad.d1, bad.d3) == bad.d2)
                    rep.undetected.push_back(make_word_pair(w, bad));
        }
    std::sort(rep.undetected.begin(), rep.undetected.end());
    rep.undetected.erase(std::unique(rep.undetected.begin(), rep.undetected.end()),
                         rep.undetected.end());
    return rep;
}

namespace {

std::string cell_str(int r, int c) {
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

void check_permutation_lines(const CheckTable& t, StructuralCheck& out) {
    StructuralProfile p = structural_profile(t);
    out.passed = p.rows_are_permutations && p.columns_are_permutations;
    if (out.passed) return;
    const int n = t.base();
    for (int r = 0; r < n; ++r) {
        std::vector<char> seen(n, 0);
        for (int c = 0; c < n; ++c) {
            int v = t.cell(r, c);
            if (seen[v]) {
                out.witnesses.push_back("row " + std::to_string(r) + " repeats symbol " +
                                        std::to_string(v));
                break;
            }
            seen[v] = 1;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::vector<char> seen(n, 0);
        for (int r = 0; r < n; ++r) {
            int v = t.cell(r, c);
            if (seen[v]) {
                out.witnesses.push_back("column " + std::to_string(c) + " repeats symbol " +
                                        std::to_string(v));
                break;
            }
            seen[v] = 1;
        }
    }
}

}  // namespace

StructuralCheck structural_check(const CheckTable& t, ErrorClass cls) {
    StructuralCheck out;
    const int n = t.base();
    switch (cls) {
        case ErrorClass::single:
            out.has_shortcut = true;
            check_permutation_lines(t, out);
            break;
        case ErrorClass::adjacent_transposition: {
            out.has_shortcut = true;
            StructuralProfile p = structural_profile(t);
            out.passed = p.row_two_cycles.empty() && p.column_two_cycles.empty();
            for (const auto& tc : p.row_two_cycles)
                out.witnesses.push_back("row " + std::to_string(tc.line) + " map has 2-cycle (" +
                                        std::to_string(tc.a) + " " + std::to_string(tc.b) + ")");
            for (const auto& tc : p.column_two_cycles)
                out.witnesses.push_back("column " + std::to_string(tc.line) +
                                        " map has 2-cycle (" + std::to_string(tc.a) + " " +
                                        std::to_string(tc.b) + ")");
            break;
        }
        case ErrorClass::twin: {
            out.has_shortcut = true;
            StructuralProfile p = structural_profile(t);
            out.passed = true;
            for (int r = 0; r < n; ++r)
                if (p.row_fixed_point_counts[r] > 1) {
                    out.passed = false;
                    out.witnesses.push_back("row " + std::to_string(r) + " map has " +
                                            std::to_string(p.row_fixed_point_counts[r]) +
                                            " fixed points");
                }
            for (int c = 0; c < n; ++c)
                if (p.column_fixed_point_counts[c] > 1) {
                    out.passed = false;
                    out.witnesses.push_back("column " + std::to_string(c) + " map has " +
                                            std::to_string(p.column_fixed_point_counts[c]) +
                                            " fixed points");
                }
            break;
        }
        case ErrorClass::jump_twin: {
            out.has_shortcut = true;
            out.passed = structural_profile(t).diagonal_is_permutation;
            if (!out.passed)
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        if (t.cell(a, a) == t.cell(b, b))
                            out.witnesses.push_back("diagonal repeats symbol " +
                                                    std::to_string(t.cell(a, a)) + " at " +
                                                    std::to_string(a) + " and " +
                                                    std::to_string(b));
            break;
        }
        case ErrorClass::jump_transposition:
            out.has_shortcut = true;
            out.passed = true;
            for (int a = 0; a < n; ++a)
                for (int c = a + 1; c < n; ++c)
                    if (t.cell(a, c) == t.cell(c, a)) {
                        out.passed = false;
                        out.witnesses.push_back("cells " + cell_str(a, c) + " and " +
                                                cell_str(c, a) + " both hold " +
                                                std::to_string(t.cell(a, c)));
                    }
            break;
        case ErrorClass::permutation: {
            out.has_shortcut = true;
            out.passed = true;
            std::map<std::array<int, 3>, Word> seen;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    Word w{r, t.cell(r, c), c};
                    std::array<int, 3> key = {w.d1, w.d2, w.d3};
                    std::sort(key.begin(), key.end());
                    auto [it, fresh] = seen.emplace(key, w);
                    if (!fresh) {
                        out.passed = false;
                        out.witnesses.push_back("codewords " + to_string(it->second) + " and " +
                                                to_string(w) + " share one digit multiset");
                    }
                }
            break;
        }
        default:
            break;  // no structural shortcut
    }
    return out;
}

std::vector<DetectionReport> full_report(const CheckTable& t, PhoneticRange range) {
    std::vector<DetectionReport> out;
    out.reserve(kAllErrorClasses.size());
    for (ErrorClass cls : kAllErrorClasses) {
        DetectionReport rep = detect(t, cls, range);
        StructuralCheck sc = structural_check(t, cls);
        if (sc.has_shortcut) rep.structural_equivalent_passed = sc.passed;
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace ckd3
