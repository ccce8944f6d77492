#include "ckd3/table.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ckd3 {

std::string to_string(Word w) {
    std::string out;
    out += static_cast<char>('0' + w.d1);
    out += static_cast<char>('0' + w.d2);
    out += static_cast<char>('0' + w.d3);
    return out;
}

std::string to_string(Triple t) { return to_string(as_word(t)); }

CheckTable::CheckTable(int base, std::vector<int> cells, std::string name)
    : base_(base), cells_(std::move(cells)), name_(std::move(name)) {
    if (base_ < kMinBase || base_ > kMaxBase)
        throw std::invalid_argument("base must be in " + std::to_string(kMinBase) + ".." +
                                    std::to_string(kMaxBase) + ", got " + std::to_string(base_));
    if (cells_.size() != static_cast<std::size_t>(base_) * base_)
        throw std::invalid_argument("expected " + std::to_string(base_ * base_) +
                                    " cells, got " + std::to_string(cells_.size()));
    for (int v : cells_)
        if (v < 0 || v >= base_)
            throw std::invalid_argument("cell value " + std::to_string(v) +
                                        " out of range for base " + std::to_string(base_));
}

CheckTable CheckTable::renamed(std::string name) const {
    CheckTable copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '#';
    }
    return true;  // whitespace only
}

bool numeric_token(const std::string& tok) {
    if (tok.empty()) return false;
    for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

CheckTable parse_table(std::istream& in, std::string name) {
    int base = 0;  // 0: not yet fixed
    std::vector<int> cells;
    int rows_seen = 0;
    int lineno = 0;
    std::string line;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank_or_comment(line)) continue;

        std::istringstream toks(line);
        std::vector<std::string> tok;
        for (std::string t; toks >> t;) tok.push_back(std::move(t));

        if (!numeric_token(tok.front())) {
            if (tok.front() != "base")
                throw ParseError(lineno, "unknown directive '" + tok.front() + "'");
            if (rows_seen > 0)
                throw ParseError(lineno, "unknown directive: 'base' must precede the rows");
            if (base != 0)
                throw ParseError(lineno, "duplicate 'base' directive");
            if (tok.size() != 2 || !numeric_token(tok[1]))
                throw ParseError(lineno, "malformed 'base' directive");
            int value = std::stoi(tok[1]);
            if (value < kMinBase || value > kMaxBase)
                throw ParseError(lineno, "base " + std::to_string(value) + " out of range " +
                                             std::to_string(kMinBase) + ".." +
                                             std::to_string(kMaxBase));
            base = value;
            continue;
        }

        if (base == 0) base = 10;
        if (rows_seen == base)
            throw ParseError(lineno, "wrong row count: more than " + std::to_string(base) +
                                         " rows");
        if (static_cast<int>(tok.size()) != base)
            throw ParseError(lineno, "malformed row length: expected " + std::to_string(base) +
                                         " cells, got " + std::to_string(tok.size()));
        for (const std::string& t : tok) {
            if (!numeric_token(t)) throw ParseError(lineno, "malformed cell '" + t + "'");
            int v = std::stoi(t);
            if (v < 0 || v >= base)
                throw ParseError(lineno, "digit " + t + " out of range for base " +
                                             std::to_string(base));
            cells.push_back(v);
        }
        ++rows_seen;
    }

    if (base == 0) base = 10;
    if (rows_seen != base)
        throw ParseError(lineno, "wrong row count: expected " + std::to_string(base) +
                                     " rows, got " + std::to_string(rows_seen));
    return CheckTable(base, std::move(cells), std::move(name));
}

CheckTable parse_table(const std::string& text, std::string name) {
    std::istringstream in(text);
    return parse_table(in, std::move(name));
}

CheckTable load_table_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path.string());
    return parse_table(in, path.stem().string());
}

std::string serialize_table(const CheckTable& t) {
    std::string out = "base " + std::to_string(t.base()) + "\n";
    for (int r = 0; r < t.base(); ++r) {
        for (int c = 0; c < t.base(); ++c) {
            if (c) out += ' ';
            out += std::to_string(t.cell(r, c));
        }
        out += '\n';
    }
    return out;
}

void write_table_file(const CheckTable& t, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write table file: " + path.string());
    out << serialize_table(t);
}

namespace {

// Published reference tables, embedded in canonical file format. The
// permutation-free table appears in print with two rows labeled "8"; the
// second of them is row 9 here (any other reading breaks the latin square).
constexpr std::string_view kVerhoeffRegular =
    "base 10\n"
    "0 3 1 2 9 4 5 6 7 8\n"
    "2 1 3 0 5 8 7 4 9 6\n"
    "3 0 2 1 7 6 9 8 5 4\n"
    "1 2 0 3 8 9 4 5 6 7\n"
    "5 7 9 6 4 1 8 2 3 0\n"
    "6 4 8 7 0 5 2 9 1 3\n"
    "7 9 5 8 3 0 6 1 4 2\n"
    "8 6 4 9 1 3 0 7 2 5\n"
    "9 5 7 4 6 2 3 0 8 1\n"
    "4 8 6 5 2 7 1 3 0 9\n";

constexpr std::string_view kVerhoeffIrregular =
    "base 10\n"
    "0 3 4 9 6 7 5 8 2 1\n"
    "5 1 0 2 8 3 9 6 7 4\n"
    "7 6 2 4 1 0 8 9 3 5\n"
    "1 5 8 3 7 6 4 0 9 2\n"
    "2 9 7 5 4 8 1 3 0 6\n"
    "6 7 9 0 3 5 2 4 1 8\n"
    "3 8 1 7 5 9 6 2 4 0\n"
    "9 4 5 8 2 1 0 7 6 3\n"
    "4 0 6 1 9 2 3 5 8 7\n"
    "8 2 3 6 0 4 7 1 5 9\n";

constexpr std::string_view kDunningT3 =
    "base 10\n"
    "0 9 7 1 2 3 4 8 6 5\n"
    "5 1 3 7 6 9 2 0 4 8\n"
    "8 4 2 6 3 0 7 5 9 1\n"
    "2 5 8 3 7 4 9 6 1 0\n"
    "1 7 6 0 4 2 8 9 5 3\n"
    "6 8 1 9 0 5 3 4 7 2\n"
    "9 3 0 8 5 7 6 1 2 4\n"
    "4 2 9 5 8 1 0 7 3 6\n"
    "3 0 5 4 9 6 1 2 8 7\n"
    "7 6 4 2 1 8 5 3 0 9\n";

const std::vector<std::string> kBuiltinNames = {
    "verhoeff-regular",
    "verhoeff-irregular",
    "dunning-t3",
};

}  // namespace

CheckTable builtin_table(std::string_view name) {
    std::string_view text;
    if (name == "verhoeff-regular")
        text = kVerhoeffRegular;
    else if (name == "verhoeff-irregular")
        text = kVerhoeffIrregular;
    else if (name == "dunning-t3")
        text = kDunningT3;
    else
        throw std::invalid_argument("unknown builtin table '" + std::string(name) +
                                    "' (expected verhoeff-regular, verhoeff-irregular, "
                                    "or dunning-t3)");
    return parse_table(std::string(text), std::string(name));
}

const std::vector<std::string>& builtin_table_names() { return kBuiltinNames; }

}  // namespace ckd3
