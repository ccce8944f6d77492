#include "ckd3/generator.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ckd3 {

std::string_view constraint_family_name(ConstraintFamily f) {
    switch (f) {
        case ConstraintFamily::row_all_different: return "RowAllDifferent";
        case ConstraintFamily::column_all_different: return "ColumnAllDifferent";
        case ConstraintFamily::diagonal_identity: return "DiagonalIdentity";
        case ConstraintFamily::off_diagonal_three_distinct: return "OffDiagonalThreeDistinct";
        case ConstraintFamily::three_subset_unique: return "ThreeSubsetUnique";
        case ConstraintFamily::phonetic: return "Phonetic";
    }
    return "?";
}

ConstraintModel build_model(int base, const SearchConfig& cfg) {
    if (base < kMinBase || base > kMaxBase)
        throw std::invalid_argument("unsupported base " + std::to_string(base));
    ConstraintModel m;
    m.base = base;
    m.phonetic_range = cfg.phonetic_range;
    m.subsets = three_subsets(base);

    const int lo = cfg.phonetic_range == PhoneticRange::literal ? 2 : 0;
    const auto& roles = RolePermutation::all();
    for (int family = 0; family < static_cast<int>(roles.size()); ++family)
        for (int x = 2; x < base; ++x)
            for (int u = lo; u < base; ++u)
                m.phonetic_pairs.push_back({family,
                                            roles[static_cast<std::size_t>(family)].apply({x, 0, u}),
                                            roles[static_cast<std::size_t>(family)].apply({1, x, u})});
    return m;
}

namespace {

bool holds_triple(const CheckTable& t, Triple x) { return t.cell(x.r, x.c) == x.s; }

}  // namespace

CheckResult check_assignment(const ConstraintModel& m, const CheckTable& t) {
    if (t.base() != m.base)
        throw std::invalid_argument("table base does not match the model");
    const int n = m.base;
    CheckResult res;
    auto add = [&res](ConstraintFamily f, std::string detail) {
        res.violations.push_back({f, std::move(detail)});
    };

    for (int r = 0; r < n; ++r) {
        std::vector<char> seen(n, 0);
        for (int c = 0; c < n; ++c) {
            int v = t.cell(r, c);
            if (seen[v]) {
                add(ConstraintFamily::row_all_different,
                    "row " + std::to_string(r) + " repeats symbol " + std::to_string(v));
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
                add(ConstraintFamily::column_all_different,
                    "column " + std::to_string(c) + " repeats symbol " + std::to_string(v));
                break;
            }
            seen[v] = 1;
        }
    }
    for (int i = 0; i < n; ++i)
        if (t.cell(i, i) != i)
            add(ConstraintFamily::diagonal_identity,
                "cell(" + std::to_string(i) + "," + std::to_string(i) + ")=" +
                    std::to_string(t.cell(i, i)) + ", expected " + std::to_string(i));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (r != c && (t.cell(r, c) == r || t.cell(r, c) == c))
                add(ConstraintFamily::off_diagonal_three_distinct,
                    "cell(" + std::to_string(r) + "," + std::to_string(c) + ")=" +
                        std::to_string(t.cell(r, c)) + " collides with its row or column index");

    CombinationIndex idx = combination_index(to_triples(t));
    for (std::size_t k = 0; k < idx.subsets.size(); ++k)
        if (idx.members[k].size() > 1) {
            std::string detail = "subset {" + std::to_string(idx.subsets[k][0]) + "," +
                                 std::to_string(idx.subsets[k][1]) + "," +
                                 std::to_string(idx.subsets[k][2]) + "} realized " +
                                 std::to_string(idx.members[k].size()) + " times:";
            for (Triple x : idx.members[k]) detail += " (" + to_string(x) + ")";
            add(ConstraintFamily::three_subset_unique, std::move(detail));
        }

    for (const auto& pp : m.phonetic_pairs)
        if (holds_triple(t, pp.a) && holds_triple(t, pp.b))
            add(ConstraintFamily::phonetic,
                "phonetic[" +
                    std::string(RolePermutation::all()[static_cast<std::size_t>(pp.family)]
                                    .name()) +
                    "]: both (" + to_string(pp.a) + ") and (" + to_string(pp.b) + ") present");

    res.ok = res.violations.empty();
    return res;
}

// ---------------------------------------------------------------------------
// Backtracking search
// ---------------------------------------------------------------------------

namespace {

class Search {
public:
    Search(const ConstraintModel& model, const SearchConfig& cfg)
        : model_(model), cfg_(cfg), n_(model.base), rng_(cfg.seed) {
        grid_.assign(static_cast<std::size_t>(n_) * n_, -1);
        subset_rank_.assign(static_cast<std::size_t>(n_) * n_ * n_, -1);
        for (std::size_t k = 0; k < model_.subsets.size(); ++k) {
            const auto& s = model_.subsets[k];
            subset_rank_[(static_cast<std::size_t>(s[0]) * n_ + s[1]) * n_ + s[2]] =
                static_cast<int>(k);
        }
        partners_.assign(static_cast<std::size_t>(n_) * n_ * n_, {});
        for (const auto& pp : model_.phonetic_pairs) {
            partners_[tid(pp.a)].push_back(pp.b);
            partners_[tid(pp.b)].push_back(pp.a);
        }
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c)
                if (r != c) cells_.push_back({r, c});
        for (int s = 0; s < n_; ++s) value_order_[static_cast<std::size_t>(s)] = s;
    }

    SolveResult run() {
        start_ = std::chrono::steady_clock::now();
        shuffle_values();
        SolveResult result;
        for (;;) {
            reset_state();
            restart_cut_ = false;
            bool found = descend();
            if (found) {
                std::vector<int> cells(grid_.begin(), grid_.end());
                result.table = CheckTable(n_, std::move(cells),
                                          "generated-b" + std::to_string(n_) + "-s" +
                                              std::to_string(cfg_.seed));
                break;
            }
            if (out_of_budget_) break;
            if (!restart_cut_) {
                stats_.exhausted = true;  // full tree explored, no solution
                break;
            }
            ++stats_.restarts;
            shuffle_values();
        }
        stats_.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        result.stats = stats_;
        return result;
    }

private:
    std::size_t tid(Triple t) const {
        return (static_cast<std::size_t>(t.r) * n_ + t.c) * n_ + t.s;
    }
    int subset_rank(int r, int s, int c) const {
        int a = r, b = s, cc = c;
        if (a > b) std::swap(a, b);
        if (b > cc) std::swap(b, cc);
        if (a > b) std::swap(a, b);
        return subset_rank_[(static_cast<std::size_t>(a) * n_ + b) * n_ + cc];
    }

    void reset_state() {
        std::fill(grid_.begin(), grid_.end(), -1);
        row_used_.assign(static_cast<std::size_t>(n_), 0u);
        col_used_.assign(static_cast<std::size_t>(n_), 0u);
        subset_used_.assign(model_.subsets.size(), 0);
        for (int i = 0; i < n_; ++i) {
            grid_[static_cast<std::size_t>(i) * n_ + i] = i;
            row_used_[static_cast<std::size_t>(i)] |= 1u << i;
            col_used_[static_cast<std::size_t>(i)] |= 1u << i;
        }
        fails_ = 0;
        depth_ = 0;
    }

    void shuffle_values() {
        for (int i = n_ - 1; i > 0; --i) {
            int j = static_cast<int>(rng_() % static_cast<std::uint64_t>(i + 1));
            std::swap(value_order_[static_cast<std::size_t>(i)],
                      value_order_[static_cast<std::size_t>(j)]);
        }
    }

    bool budget_exceeded() {
        if (cfg_.max_steps >= 0 && stats_.steps >= cfg_.max_steps) return true;
        if ((stats_.steps & 0xfff) == 0) {
            auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                         start_);
            if (elapsed >= cfg_.time_budget) return true;
        }
        return false;
    }

    bool phonetic_conflict(int r, int s, int c) const {
        for (const Triple& p : partners_[(static_cast<std::size_t>(r) * n_ + c) * n_ + s])
            if (grid_[static_cast<std::size_t>(p.r) * n_ + p.c] == p.s) return true;
        return false;
    }

    int candidates(int r, int c, std::array<int, kMaxBase>& out) const {
        int k = 0;
        const unsigned used = row_used_[static_cast<std::size_t>(r)] |
                              col_used_[static_cast<std::size_t>(c)];
        for (int i = 0; i < n_; ++i) {
            int s = value_order_[static_cast<std::size_t>(i)];
            if (s == r || s == c) continue;
            if (used >> s & 1u) continue;
            if (subset_used_[static_cast<std::size_t>(subset_rank(r, s, c))]) continue;
            if (phonetic_conflict(r, s, c)) continue;
            out[static_cast<std::size_t>(k++)] = s;
        }
        return k;
    }

    // Most-constrained unassigned cell; lexicographic tie-break comes from
    // cells_ being in lexicographic order and the strict '<'.
    bool pick(int& r, int& c, std::array<int, kMaxBase>& cand, int& cand_n) const {
        int best_n = n_ + 1;
        std::array<int, kMaxBase> tmp{};
        bool any = false;
        for (const auto& [cr, cc] : cells_) {
            if (grid_[static_cast<std::size_t>(cr) * n_ + cc] != -1) continue;
            any = true;
            int k = candidates(cr, cc, tmp);
            if (k < best_n) {
                best_n = k;
                r = cr;
                c = cc;
                cand = tmp;
                cand_n = k;
                if (k == 0) break;
            }
        }
        return any;
    }

    bool descend() {
        int r = 0, c = 0, cand_n = 0;
        std::array<int, kMaxBase> cand{};
        if (!pick(r, c, cand, cand_n)) return true;  // complete assignment
        if (cand_n == 0) {
            ++stats_.backtracks;
            if (++fails_ >= cfg_.restart_interval) restart_cut_ = true;
            return false;
        }
        for (int i = 0; i < cand_n; ++i) {
            if (budget_exceeded()) {
                out_of_budget_ = true;
                return false;
            }
            const int s = cand[static_cast<std::size_t>(i)];
            ++stats_.steps;
            grid_[static_cast<std::size_t>(r) * n_ + c] = s;
            row_used_[static_cast<std::size_t>(r)] |= 1u << s;
            col_used_[static_cast<std::size_t>(c)] |= 1u << s;
            subset_used_[static_cast<std::size_t>(subset_rank(r, s, c))] = 1;
            ++depth_;
            stats_.deepest_level = std::max(stats_.deepest_level, depth_);

            if (descend()) return true;

            --depth_;
            grid_[static_cast<std::size_t>(r) * n_ + c] = -1;
            row_used_[static_cast<std::size_t>(r)] &= ~(1u << s);
            col_used_[static_cast<std::size_t>(c)] &= ~(1u << s);
            subset_used_[static_cast<std::size_t>(subset_rank(r, s, c))] = 0;

            if (out_of_budget_ || restart_cut_) return false;
        }
        ++stats_.backtracks;
        if (++fails_ >= cfg_.restart_interval) restart_cut_ = true;
        return false;
    }

    const ConstraintModel& model_;
    SearchConfig cfg_;
    int n_;
    std::mt19937_64 rng_;

    std::vector<int> grid_;
    std::vector<unsigned> row_used_, col_used_;
    std::vector<char> subset_used_;
    std::vector<int> subset_rank_;
    std::vector<std::vector<Triple>> partners_;
    std::vector<std::pair<int, int>> cells_;
    std::array<int, kMaxBase> value_order_{};

    SearchStats stats_;
    std::chrono::steady_clock::time_point start_;
    long long fails_ = 0;
    int depth_ = 0;
    bool restart_cut_ = false;
    bool out_of_budget_ = false;
};

}  // namespace

SolveResult solve(const ConstraintModel& model, const SearchConfig& cfg) {
    SolveResult result = Search(model, cfg).run();
    if (result.table) {
        // A returned table must satisfy the model and the whole error suite.
        if (!check_assignment(model, *result.table).ok)
            throw std::logic_error("search produced a table violating its own model");
        for (const DetectionReport& rep : full_report(*result.table, model.phonetic_range))
            if (rep.error_class != ErrorClass::triple_error && !rep.clean())
                throw std::logic_error("search produced a table failing the error suite");
    }
    return result;
}

// ---------------------------------------------------------------------------
// LP export
// ---------------------------------------------------------------------------

namespace {

std::string var(int r, int c, int s) {
    return "x_" + std::to_string(r) + "_" + std::to_string(c) + "_" + std::to_string(s);
}

}  // namespace

std::string export_model(const ConstraintModel& m) {
    const int n = m.base;
    std::ostringstream out;
    out << "\\ length-3 check digit table model, base " << n << "\n";
    out << "\\ x_r_c_s = 1 iff cell(r,c) = s\n";
    out << "\\ family counts:\n";
    out << "\\   CellAssignment: " << n * n << "\n";
    out << "\\   RowAllDifferent: " << m.row_all_different_count() << " (linearized: " << n * n
        << " symbol equalities)\n";
    out << "\\   ColumnAllDifferent: " << m.column_all_different_count() << " (linearized: "
        << n * n << " symbol equalities)\n";
    out << "\\   DiagonalIdentity: " << m.diagonal_identity_count() << "\n";
    out << "\\   OffDiagonalThreeDistinct: " << m.off_diagonal_three_distinct_count() << "\n";
    out << "\\   ThreeSubsetUnique: " << m.three_subset_unique_count() << "\n";
    out << "\\   Phonetic: " << m.phonetic_family_count() << " families, "
        << m.phonetic_pairs.size() << " ground pairs ("
        << (m.phonetic_range == PhoneticRange::literal ? "literal" : "full") << " range)\n";
    out << "Minimize\n obj:\n";
    out << "Subject To\n";

    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            out << " cell_" << r << "_" << c << ":";
            for (int s = 0; s < n; ++s) out << (s ? " + " : " ") << var(r, c, s);
            out << " = 1\n";
        }
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            out << " rowsym_" << r << "_" << s << ":";
            for (int c = 0; c < n; ++c) out << (c ? " + " : " ") << var(r, c, s);
            out << " = 1\n";
        }
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < n; ++s) {
            out << " colsym_" << c << "_" << s << ":";
            for (int r = 0; r < n; ++r) out << (r ? " + " : " ") << var(r, c, s);
            out << " = 1\n";
        }
    for (int i = 0; i < n; ++i)
        out << " diag_" << i << ": " << var(i, i, i) << " = 1\n";
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (r != c)
                out << " offdiag_" << r << "_" << c << ": " << var(r, c, r) << " + "
                    << var(r, c, c) << " = 0\n";
    for (const auto& sub : m.subsets) {
        out << " subset_" << sub[0] << "_" << sub[1] << "_" << sub[2] << ":";
        // all six placements (r,s,c) of the subset at matching cells
        std::array<int, 3> d = {sub[0], sub[1], sub[2]};
        std::sort(d.begin(), d.end());
        bool first = true;
        do {
            out << (first ? " " : " + ") << var(d[0], d[2], d[1]);
            first = false;
        } while (std::next_permutation(d.begin(), d.end()));
        out << " <= 1\n";
    }
    {
        int k = 0;
        int family = -1;
        for (const auto& pp : m.phonetic_pairs) {
            if (pp.family != family) {
                family = pp.family;
                k = 0;
            }
            out << " phon_" << family << "_" << k++ << ": " << var(pp.a.r, pp.a.c, pp.a.s)
                << " + " << var(pp.b.r, pp.b.c, pp.b.s) << " <= 1\n";
        }
    }

    out << "Binary\n";
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            for (int s = 0; s < n; ++s) out << " " << var(r, c, s) << "\n";
    out << "End\n";
    return out.str();
}

}  // namespace ckd3
