#include "ckd3/codec.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ckd3/conjugacy.hpp"

namespace ckd3 {

PartialWord& PartialWord::set(int position, int digit) {
    if (position < 1 || position > 3)
        throw std::invalid_argument("position must be 1..3, got " + std::to_string(position));
    auto& slot = digits_[static_cast<std::size_t>(position - 1)];
    if (slot.has_value())
        throw std::invalid_argument("position " + std::to_string(position) + " set twice");
    if (digit < 0 || digit >= kMaxBase)
        throw std::invalid_argument("digit out of range: " + std::to_string(digit));
    slot = digit;
    return *this;
}

std::optional<int> PartialWord::at(int position) const {
    if (position < 1 || position > 3)
        throw std::invalid_argument("position must be 1..3, got " + std::to_string(position));
    return digits_[static_cast<std::size_t>(position - 1)];
}

int PartialWord::assigned() const {
    int n = 0;
    for (const auto& d : digits_) n += d.has_value();
    return n;
}

Word encode(const CheckTable& t, int r, int c) {
    if (r < 0 || r >= t.base() || c < 0 || c >= t.base())
        throw std::invalid_argument("information digits out of range for base " +
                                    std::to_string(t.base()));
    return {r, t.cell(r, c), c};
}

bool is_codeword(const CheckTable& t, Word w) {
    if (w.d1 < 0 || w.d1 >= t.base() || w.d2 < 0 || w.d2 >= t.base() || w.d3 < 0 ||
        w.d3 >= t.base())
        return false;
    return t.cell(w.d1, w.d3) == w.d2;
}

std::vector<Word> completions(const CheckTable& t, const PartialWord& partial) {
    std::vector<Word> out;
    const int n = t.base();
    for (int p = 1; p <= 3; ++p) {
        auto d = partial.at(p);
        if (d.has_value() && *d >= n)
            throw std::invalid_argument("digit " + std::to_string(*d) +
                                        " out of range for base " + std::to_string(n));
    }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Word w{r, t.cell(r, c), c};
            if (partial.at(1).value_or(w.d1) != w.d1) continue;
            if (partial.at(2).value_or(w.d2) != w.d2) continue;
            if (partial.at(3).value_or(w.d3) != w.d3) continue;
            out.push_back(w);
        }
    return out;  // already sorted: (r,c) scan is lexicographic in (d1,d3)
}

CompletionError::CompletionError(std::string what, std::vector<Word> candidates)
    : std::runtime_error(std::move(what)), candidates_(std::move(candidates)) {}

Word complete(const CheckTable& t, const PartialWord& partial) {
    if (partial.assigned() != 2)
        throw std::invalid_argument("complete() needs exactly two assigned positions");
    std::vector<Word> found = completions(t, partial);
    if (found.size() == 1) return found.front();
    std::ostringstream msg;
    msg << (found.empty() ? "no codeword matches" : "completion is ambiguous") << " (";
    for (std::size_t i = 0; i < found.size() && i < 8; ++i)
        msg << (i ? " " : "") << to_string(found[i]);
    msg << ")";
    throw CompletionError(msg.str(), std::move(found));
}

std::vector<Word> words_containing(const CheckTable& t, const std::vector<int>& digits) {
    if (digits.size() != 2 && digits.size() != 3)
        throw std::invalid_argument("words_containing() takes 2 or 3 digits");
    std::vector<int> want(digits);
    std::sort(want.begin(), want.end());

    std::vector<Word> out;
    const int n = t.base();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Word w{r, t.cell(r, c), c};
            std::array<int, 3> have = {w.d1, w.d2, w.d3};
            std::sort(have.begin(), have.end());
            if (std::includes(have.begin(), have.end(), want.begin(), want.end()))
                out.push_back(w);
        }
    std::sort(out.begin(), out.end());
    return out;
}

CategoryRegistry::CategoryRegistry(const CheckTable& base_table)
    : categories_(six_conjugate_tables(base_table)) {}

const CheckTable& CategoryRegistry::category_table(int category) const {
    if (category < 0 || category >= static_cast<int>(categories_.size()))
        throw std::invalid_argument("category must be 0..5");
    return categories_[static_cast<std::size_t>(category)];
}

CategoryRegistry::IssueResult CategoryRegistry::issue(int category, int r, int c) {
    Word w = encode(category_table(category), r, c);
    if (w.d1 == w.d2 && w.d2 == w.d3) return {IssueStatus::rejected_diagonal, w};
    auto it = issued_.find(w);
    if (it != issued_.end()) {
        if (it->second != category)
            throw std::runtime_error("word " + to_string(w) +
                                     " already issued by category " +
                                     std::to_string(it->second));
        return {IssueStatus::duplicate, w};
    }
    issued_.emplace(w, category);
    log_.push_back({category, w});
    return {IssueStatus::issued, w};
}

void CategoryRegistry::write_log(std::ostream& out) const {
    for (const Entry& e : log_) out << e.category << ' ' << to_string(e.word) << '\n';
}

CategoryRegistry CategoryRegistry::replay_log(const CheckTable& base_table, std::istream& in) {
    CategoryRegistry reg(base_table);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream toks(line);
        int category = -1;
        std::string word;
        if (!(toks >> category >> word) || word.size() != 3)
            throw std::runtime_error("registry log line " + std::to_string(lineno) +
                                     ": malformed entry");
        Word w{word[0] - '0', word[1] - '0', word[2] - '0'};
        IssueResult res = reg.issue(category, w.d1, w.d3);
        if (!res.word || *res.word != w || res.status == IssueStatus::rejected_diagonal)
            throw std::runtime_error("registry log line " + std::to_string(lineno) + ": " +
                                     to_string(w) + " is not an issuable codeword of category " +
                                     std::to_string(category));
    }
    return reg;
}

}  // namespace ckd3
