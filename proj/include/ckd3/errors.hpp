#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ckd3/table.hpp"

namespace ckd3 {

/// The corruption families. Each has a total corruption function on words
/// (possibly empty per word).
enum class ErrorClass {
    single,                  // one position changes
    adjacent_transposition,  // differing adjacent digits swap
    twin,                    // aa -> bb in an adjacent pair
    jump_twin,               // (a,b,a) -> (c,b,c)
    jump_transposition,      // (a,b,c) -> (c,b,a)
    phonetic_right,          // (X,0,c) <-> (1,X,c), X >= 2
    phonetic_left,           // (r,X,0) <-> (r,1,X), X >= 2
    cyclic,                  // (a,b,c) -> (b,c,a)
    permutation,             // any nontrivial position permutation
    triple_error,            // all three positions change
};

inline constexpr std::array<ErrorClass, 10> kAllErrorClasses = {
    ErrorClass::single,          ErrorClass::adjacent_transposition,
    ErrorClass::twin,            ErrorClass::jump_twin,
    ErrorClass::jump_transposition, ErrorClass::phonetic_right,
    ErrorClass::phonetic_left,   ErrorClass::cyclic,
    ErrorClass::permutation,     ErrorClass::triple_error,
};

std::string_view error_class_name(ErrorClass);  // "jump-twin", "phonetic-right", ...
std::optional<ErrorClass> error_class_from_name(std::string_view);

/// Range of the uninvolved digit in the phonetic patterns. `full` (default)
/// lets it run over the whole alphabet and is the stricter check; `literal`
/// keeps the 2..base-1 restriction for fidelity experiments.
enum class PhoneticRange { full, literal };

/// All words reachable from w by one error of the class, sorted, excluding w.
std::vector<Word> corruptions(ErrorClass, Word w, int base,
                              PhoneticRange = PhoneticRange::full);

struct DetectionReport {
    ErrorClass error_class{};
    int base = 10;
    std::vector<WordPair> undetected;  // sorted unordered codeword pairs, each once
    long words_examined = 0;
    std::optional<bool> structural_equivalent_passed;

    int pair_count() const { return static_cast<int>(undetected.size()); }
    bool clean() const { return undetected.empty(); }
};

/// Exhaustive enumeration: every unordered pair of codewords related by the
/// class. Deterministic (sorted) output.
DetectionReport detect(const CheckTable&, ErrorClass, PhoneticRange = PhoneticRange::full);

/// Table criterion for the classes that have one (single, adjacent
/// transposition, twin, jump twin, jump transposition, permutation); other
/// classes report has_shortcut=false.
struct StructuralCheck {
    bool has_shortcut = false;
    bool passed = false;                  // meaningful only when has_shortcut
    std::vector<std::string> witnesses;   // offending cells/lines when failed
};

StructuralCheck structural_check(const CheckTable&, ErrorClass);

/// detect() for every class in kAllErrorClasses order, with
/// structural_equivalent_passed attached where a shortcut exists.
std::vector<DetectionReport> full_report(const CheckTable&,
                                         PhoneticRange = PhoneticRange::full);

}  // namespace ckd3
