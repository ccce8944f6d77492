#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ckd3/conjugacy.hpp"
#include "ckd3/errors.hpp"
#include "ckd3/table.hpp"

namespace ckd3 {

enum class ConstraintFamily {
    row_all_different,
    column_all_different,
    diagonal_identity,
    off_diagonal_three_distinct,
    three_subset_unique,
    phonetic,
};

std::string_view constraint_family_name(ConstraintFamily);

struct SearchConfig {
    std::uint64_t seed = 1;
    long long max_steps = -1;  // value assignments tried; < 0 means unlimited
    int restart_interval = 2000;  // dead ends per restart before reshuffling
    std::chrono::duration<double> time_budget = std::chrono::seconds(600);
    PhoneticRange phonetic_range = PhoneticRange::full;
};

/// Ground-constraint description of the table search problem:
/// rows/columns all-different, identity diagonal, cell(r,c) ∉ {r,c} off the
/// diagonal, every 3-subset realized by at most one off-diagonal cell, and
/// six phonetic families (the right-phonetic pattern under each role
/// permutation, so all six conjugates come out phonetic-free).
struct ConstraintModel {
    int base = 10;
    PhoneticRange phonetic_range = PhoneticRange::full;

    struct PhoneticPair {
        int family = 0;  // index into RolePermutation::all()
        Triple a, b;     // at most one of the two triples may be a codeword
    };

    std::vector<std::array<int, 3>> subsets;    // three_subsets(base)
    std::vector<PhoneticPair> phonetic_pairs;   // grouped by family, deterministic order

    int row_all_different_count() const { return base; }
    int column_all_different_count() const { return base; }
    int diagonal_identity_count() const { return base; }
    int off_diagonal_three_distinct_count() const { return base * base - base; }
    int three_subset_unique_count() const { return static_cast<int>(subsets.size()); }
    int phonetic_family_count() const { return 6; }
};

/// Throws std::invalid_argument for bases outside 4..10.
ConstraintModel build_model(int base, const SearchConfig& = {});

struct Violation {
    ConstraintFamily family{};
    std::string detail;
};

struct CheckResult {
    bool ok = false;
    std::vector<Violation> violations;
};

/// Evaluates every ground constraint; throws std::invalid_argument on base
/// mismatch.
CheckResult check_assignment(const ConstraintModel&, const CheckTable&);

struct SearchStats {
    long long steps = 0;       // value assignments tried
    long long backtracks = 0;  // dead ends hit
    int deepest_level = 0;     // most off-diagonal cells simultaneously assigned
    int restarts = 0;
    bool exhausted = false;    // search space proven empty (not a budget stop)
    double seconds = 0.0;
};

struct SolveResult {
    std::optional<CheckTable> table;  // verified against the model when present
    SearchStats stats;
};

/// Systematic backtracking: most-constrained-cell ordering with lexicographic
/// ties, seed-shuffled value order, forward propagation of the all-different
/// and subset-cap state, restart every restart_interval dead ends. Returns
/// NotFound only on budget exhaustion or a fully explored space.
/// Deterministic for a fixed config.
SolveResult solve(const ConstraintModel&, const SearchConfig& = {});

/// LP-format text with one 0/1 indicator x_r_c_s per (cell, symbol); header
/// comments list the family counts. Meant for external solvers.
std::string export_model(const ConstraintModel&);

}  // namespace ckd3
