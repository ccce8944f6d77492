#pragma once

#include <array>
#include <vector>

#include "ckd3/table.hpp"

namespace ckd3 {

/// Orthogonal-array view L = N ∪ D of a table's codewords. Triples with
/// exactly two equal coordinates (possible in arbitrary grids) stay in `all`
/// but belong to neither part; structural_profile flags them.
struct TripleSystem {
    int base = 10;
    std::vector<Triple> all;          // L, sorted
    std::vector<Triple> nondiagonal;  // N: three distinct coordinate values
    std::vector<Triple> diagonal;     // D: all coordinates equal
};

TripleSystem to_triples(const CheckTable&);

/// Partition an arbitrary triple set into the L = N ∪ D view.
TripleSystem make_triple_system(int base, std::vector<Triple> triples);

/// Rebuild the table; throws std::invalid_argument unless the system has
/// exactly one symbol per (r,c).
CheckTable table_from_triples(const TripleSystem&, std::string name = {});

/// All unordered 3-element subsets of {0..base-1}, lexicographic.
std::vector<std::array<int, 3>> three_subsets(int base);

/// Which members of N realize each 3-subset of the alphabet.
struct CombinationIndex {
    int base = 10;
    std::vector<std::array<int, 3>> subsets;   // three_subsets(base)
    std::vector<std::vector<Triple>> members;  // parallel to subsets
    bool three_subset_unique = false;          // every member list has size <= 1

    int occupied() const;  // subsets realized at least once
    const std::vector<Triple>& members_of(std::array<int, 3> subset) const;
};

CombinationIndex combination_index(const TripleSystem&);

/// Everything §-style table criteria need, computed from the grid alone.
/// Row map for row r is c -> cell(r,c); column map for column c is
/// r -> cell(r,c). A row fixed point is cell(r,c)=c, a column fixed point is
/// cell(r,c)=r. Asymmetry means cell(a,c) != cell(c,a) whenever a != c.
struct StructuralProfile {
    /// A 2-cycle {a,b} of the row-`line` (or column-`line`) map.
    struct TwoCycle {
        int line = 0;
        int a = 0;
        int b = 0;

        friend auto operator<=>(const TwoCycle&, const TwoCycle&) = default;
    };

    bool rows_are_permutations = false;
    bool columns_are_permutations = false;
    std::vector<int> row_fixed_point_counts;
    std::vector<int> column_fixed_point_counts;
    std::vector<TwoCycle> row_two_cycles;
    std::vector<TwoCycle> column_two_cycles;
    bool diagonal_is_permutation = false;
    bool asymmetric_off_diagonal = false;
    bool n_triples_all_distinct_symbols = false;  // no triple has exactly two equal coords
    bool three_subset_unique = false;
};

StructuralProfile structural_profile(const CheckTable&);

}  // namespace ckd3
