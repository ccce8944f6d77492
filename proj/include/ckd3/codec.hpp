#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ckd3/table.hpp"

namespace ckd3 {

/// Up to two (position, digit) assignments; positions are 1-based.
class PartialWord {
public:
    PartialWord() = default;

    /// Throws std::invalid_argument on a repeated or out-of-range position.
    PartialWord& set(int position, int digit);

    std::optional<int> at(int position) const;
    int assigned() const;

private:
    std::array<std::optional<int>, 3> digits_;
};

/// The codeword for information digits (r, c): (r, cell(r,c), c).
Word encode(const CheckTable&, int r, int c);

/// True iff cell(d1, d3) = d2.
bool is_codeword(const CheckTable&, Word);

/// Every codeword agreeing with the partial assignment, sorted.
std::vector<Word> completions(const CheckTable&, const PartialWord&);

/// Thrown by complete() when the table does not determine exactly one
/// codeword; carries the matching candidates as witnesses.
class CompletionError : public std::runtime_error {
public:
    CompletionError(std::string what, std::vector<Word> candidates);
    const std::vector<Word>& candidates() const noexcept { return candidates_; }

private:
    std::vector<Word> candidates_;
};

/// The unique codeword agreeing with a two-position partial word. Any two
/// positions determine the third for latin-square tables.
Word complete(const CheckTable&, const PartialWord&);

/// All codewords whose digit multiset contains the given multiset (2 or 3
/// digits, multiplicities honored), sorted. This is the probe behind the
/// positions-unknown reconstruction question: it returns every candidate
/// rather than pretending the answer is unique.
std::vector<Word> words_containing(const CheckTable&, const std::vector<int>& digits);

/// Issues codewords from the six pairwise-disjoint conjugates of one base
/// table, one category per conjugate. Diagonal words (i,i,i) are shared by
/// all conjugates and are never issued, so issued words are globally unique.
class CategoryRegistry {
public:
    /// Builds the six conjugate tables; requires a latin-square base table.
    explicit CategoryRegistry(const CheckTable& base_table);

    enum class IssueStatus { issued, duplicate, rejected_diagonal };
    struct IssueResult {
        IssueStatus status{};
        std::optional<Word> word;
    };

    /// Encodes (r,c) under conjugate #category. Re-issuing the same cell is
    /// idempotent: the same word comes back flagged duplicate.
    IssueResult issue(int category, int r, int c);

    const CheckTable& category_table(int category) const;
    std::size_t issued_count() const { return log_.size(); }

    /// Log line format: `<category digit> <d1><d2><d3>\n`, append-only.
    void write_log(std::ostream&) const;

    /// Rebuilds a registry by replaying a log; repeated lines are tolerated,
    /// corrupt lines throw std::runtime_error.
    static CategoryRegistry replay_log(const CheckTable& base_table, std::istream&);

private:
    std::vector<CheckTable> categories_;
    struct Entry {
        int category;
        Word word;
    };
    std::vector<Entry> log_;
    std::map<Word, int> issued_;  // word -> category
};

}  // namespace ckd3
