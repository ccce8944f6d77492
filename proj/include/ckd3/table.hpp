#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ckd3/types.hpp"

namespace ckd3 {

inline constexpr int kMinBase = 4;
inline constexpr int kMaxBase = 10;

/// n×n middle-digit table: cell (r,c) holds the check symbol s of the
/// codeword (r,s,c). Immutable after construction and safe to read from any
/// number of threads.
///
/// Being a latin square is NOT an invariant here; it is a checked predicate
/// (see structural_profile), because the verifier must diagnose arbitrary
/// grids.
class CheckTable {
public:
    /// Takes the cells in row-major order. Throws std::invalid_argument on a
    /// bad base, wrong cell count, or out-of-range cell.
    CheckTable(int base, std::vector<int> cells, std::string name = {});

    int base() const noexcept { return base_; }
    const std::string& name() const noexcept { return name_; }

    int cell(int r, int c) const { return cells_[static_cast<std::size_t>(r) * base_ + c]; }
    const std::vector<int>& cells() const noexcept { return cells_; }

    /// Same grid under a different label.
    CheckTable renamed(std::string name) const;

    /// Cell-for-cell equality; the label is ignored.
    bool same_cells(const CheckTable& other) const {
        return base_ == other.base_ && cells_ == other.cells_;
    }

private:
    int base_;
    std::vector<int> cells_;  // row-major, base_*base_
    std::string name_;
};

/// Parse failure with the offending 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Reads the table file format: optional '#' comment lines, an optional
/// `base <n>` directive, then exactly n rows of n whitespace-separated
/// digits. Base defaults to 10 when no directive is present.
CheckTable parse_table(std::istream& in, std::string name = {});
CheckTable parse_table(const std::string& text, std::string name = {});
CheckTable load_table_file(const std::filesystem::path& path);

/// Canonical form: `base <n>` line, then rows in index order, cells
/// space-separated, each line newline-terminated. No comments.
std::string serialize_table(const CheckTable&);
void write_table_file(const CheckTable&, const std::filesystem::path& path);

/// The three published reference tables: "verhoeff-regular",
/// "verhoeff-irregular", "dunning-t3".
CheckTable builtin_table(std::string_view name);
const std::vector<std::string>& builtin_table_names();

}  // namespace ckd3
