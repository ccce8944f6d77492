#include "ckd3/triples.hpp"

#include <algorithm>
#include <map>

namespace ckd3 {

namespace {

int distinct_coords(Triple t) {
    if (t.r == t.s && t.s == t.c) return 1;
    if (t.r != t.s && t.s != t.c && t.r != t.c) return 3;
    return 2;
}

}  // namespace

TripleSystem make_triple_system(int base, std::vector<Triple> triples) {
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    TripleSystem sys;
    sys.base = base;
    sys.all = std::move(triples);
    for (Triple t : sys.all) {
        switch (distinct_coords(t)) {
            case 1: sys.diagonal.push_back(t); break;
            case 3: sys.nondiagonal.push_back(t); break;
            default: break;  // stays only in `all`
        }
    }
    return sys;
}

TripleSystem to_triples(const CheckTable& t) {
    std::vector<Triple> all;
    all.reserve(static_cast<std::size_t>(t.base()) * t.base());
    for (int r = 0; r < t.base(); ++r)
        for (int c = 0; c < t.base(); ++c) all.push_back({r, t.cell(r, c), c});
    return make_triple_system(t.base(), std::move(all));
}

CheckTable table_from_triples(const TripleSystem& sys, std::string name) {
    const int n = sys.base;
    std::vector<int> cells(static_cast<std::size_t>(n) * n, -1);
    for (Triple t : sys.all) {
        int& slot = cells[static_cast<std::size_t>(t.r) * n + t.c];
        if (slot != -1)
            throw std::invalid_argument("triple system holds two symbols at (" +
                                        std::to_string(t.r) + "," + std::to_string(t.c) + ")");
        slot = t.s;
    }
    for (int v : cells)
        if (v == -1) throw std::invalid_argument("triple system does not cover every cell");
    return CheckTable(n, std::move(cells), std::move(name));
}

std::vector<std::array<int, 3>> three_subsets(int base) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < base; ++a)
        for (int b = a + 1; b < base; ++b)
            for (int c = b + 1; c < base; ++c) out.push_back({a, b, c});
    return out;
}

int CombinationIndex::occupied() const {
    int n = 0;
    for (const auto& m : members) n += !m.empty();
    return n;
}

const std::vector<Triple>& CombinationIndex::members_of(std::array<int, 3> subset) const {
    std::sort(subset.begin(), subset.end());
    auto it = std::lower_bound(subsets.begin(), subsets.end(), subset);
    if (it == subsets.end() || *it != subset)
        throw std::invalid_argument("not a 3-subset of the alphabet");
    return members[static_cast<std::size_t>(it - subsets.begin())];
}

CombinationIndex combination_index(const TripleSystem& sys) {
    CombinationIndex idx;
    idx.base = sys.base;
    idx.subsets = three_subsets(sys.base);
    idx.members.resize(idx.subsets.size());
    for (Triple t : sys.nondiagonal) {
        std::array<int, 3> key = {t.r, t.s, t.c};
        std::sort(key.begin(), key.end());
        auto it = std::lower_bound(idx.subsets.begin(), idx.subsets.end(), key);
        idx.members[static_cast<std::size_t>(it - idx.subsets.begin())].push_back(t);
    }
    idx.three_subset_unique = std::all_of(idx.members.begin(), idx.members.end(),
                                          [](const auto& m) { return m.size() <= 1; });
    return idx;
}

namespace {

bool is_permutation_line(const std::vector<int>& values, int base) {
    std::vector<char> seen(base, 0);
    for (int v : values) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

StructuralProfile structural_profile(const CheckTable& t) {
    const int n = t.base();
    StructuralProfile p;
    p.rows_are_permutations = true;
    p.columns_are_permutations = true;
    p.row_fixed_point_counts.assign(n, 0);
    p.column_fixed_point_counts.assign(n, 0);

    std::vector<int> line(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) line[c] = t.cell(r, c);
        if (!is_permutation_line(line, n)) p.rows_are_permutations = false;
        for (int c = 0; c < n; ++c) {
            if (t.cell(r, c) == c) ++p.row_fixed_point_counts[r];
            // 2-cycle of the row map: cell(r,a)=b and cell(r,b)=a with a<b
            if (c < t.cell(r, c) && t.cell(r, t.cell(r, c)) == c)
                p.row_two_cycles.push_back({r, c, t.cell(r, c)});
        }
    }
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) line[r] = t.cell(r, c);
        if (!is_permutation_line(line, n)) p.columns_are_permutations = false;
        for (int r = 0; r < n; ++r) {
            if (t.cell(r, c) == r) ++p.column_fixed_point_counts[c];
            if (r < t.cell(r, c) && t.cell(t.cell(r, c), c) == r)
                p.column_two_cycles.push_back({c, r, t.cell(r, c)});
        }
    }

    for (int i = 0; i < n; ++i) line[i] = t.cell(i, i);
    p.diagonal_is_permutation = is_permutation_line(line, n);

    p.asymmetric_off_diagonal = true;
    for (int a = 0; a < n && p.asymmetric_off_diagonal; ++a)
        for (int c = a + 1; c < n; ++c)
            if (t.cell(a, c) == t.cell(c, a)) {
                p.asymmetric_off_diagonal = false;
                break;
            }

    TripleSystem sys = to_triples(t);
    p.n_triples_all_distinct_symbols =
        sys.nondiagonal.size() + sys.diagonal.size() == sys.all.size();
    p.three_subset_unique = combination_index(sys).three_subset_unique;
    return p;
}

}  // namespace ckd3
