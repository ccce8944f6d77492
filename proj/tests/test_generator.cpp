#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "ckd3/generator.hpp"
#include "ckd3/oracle.hpp"
#include "ckd3/triples.hpp"

using namespace ckd3;

namespace {

SearchConfig literal_config() {
    SearchConfig cfg;
    cfg.phonetic_range = PhoneticRange::literal;
    return cfg;
}

}  // namespace

TEST_CASE("model counts") {
    ConstraintModel m10 = build_model(10);
    CHECK(m10.three_subset_unique_count() == 120);
    CHECK(m10.off_diagonal_three_distinct_count() == 90);
    CHECK(m10.row_all_different_count() == 10);
    CHECK(m10.phonetic_pairs.size() == 480);  // 6 families x 8 X-values x 10

    CHECK(build_model(10, literal_config()).phonetic_pairs.size() == 384);

    ConstraintModel m4 = build_model(4);
    CHECK(m4.three_subset_unique_count() == 4);
    CHECK(m4.off_diagonal_three_distinct_count() == 12);
    CHECK(m4.phonetic_pairs.size() == 48);

    CHECK_THROWS_AS(build_model(3), std::invalid_argument);
    CHECK_THROWS_AS(build_model(11), std::invalid_argument);
}

TEST_CASE("check_assignment separates the three builtins") {
    ConstraintModel model = build_model(10);

    SUBCASE("dunning-t3 satisfies everything") {
        CheckResult res = check_assignment(model, builtin_table("dunning-t3"));
        CHECK(res.ok);
        CHECK(res.violations.empty());
    }
    SUBCASE("verhoeff-regular violates subsets and all six phonetic families") {
        CheckResult res = check_assignment(model, builtin_table("verhoeff-regular"));
        CHECK_FALSE(res.ok);
        CHECK(res.violations.size() == 54);
        bool quoted_pair = false;
        std::set<std::string> families;
        for (const Violation& v : res.violations) {
            families.insert(std::string(constraint_family_name(v.family)));
            if (v.family == ConstraintFamily::phonetic &&
                v.detail.find("(302)") != std::string::npos &&
                v.detail.find("(132)") != std::string::npos)
                quoted_pair = true;
        }
        CHECK(quoted_pair);
        CHECK(families == std::set<std::string>{"ThreeSubsetUnique", "Phonetic"});
    }
    SUBCASE("verhoeff-irregular violates subsets via its cyclic errors") {
        CheckResult res = check_assignment(model, builtin_table("verhoeff-irregular"));
        CHECK_FALSE(res.ok);
        CHECK(res.violations.size() == 18);
        std::set<std::string> phonetic_families;
        int subset_violations = 0;
        for (const Violation& v : res.violations) {
            if (v.family == ConstraintFamily::three_subset_unique) ++subset_violations;
            if (v.family == ConstraintFamily::phonetic)
                phonetic_families.insert(v.detail.substr(0, v.detail.find(']') + 1));
        }
        CHECK(subset_violations == 16);
        CHECK(phonetic_families == std::set<std::string>{"phonetic[rs]", "phonetic[rcs]"});
    }
    SUBCASE("all-zeros violates the row constraint") {
        CheckResult res = check_assignment(build_model(4), CheckTable(4, std::vector<int>(16, 0)));
        CHECK_FALSE(res.ok);
        bool row_hit = false;
        for (const Violation& v : res.violations)
            row_hit |= v.family == ConstraintFamily::row_all_different;
        CHECK(row_hit);
    }
    SUBCASE("base mismatch throws") {
        CHECK_THROWS_AS(check_assignment(build_model(4), builtin_table("dunning-t3")),
                        std::invalid_argument);
    }
}

TEST_CASE("solve finds a clean table at base 10 and is seed-deterministic") {
    ConstraintModel model = build_model(10);
    SearchConfig cfg;
    cfg.seed = 2;
    cfg.time_budget = std::chrono::seconds(120);

    SolveResult first = solve(model, cfg);
    REQUIRE(first.table.has_value());
    CHECK(first.stats.deepest_level == 90);

    // solve() already verified the model; cross-check with the oracle too
    CHECK(check_assignment(model, *first.table).ok);
    for (ErrorClass cls : kAllErrorClasses) {
        auto undetected = oracle::brute_undetected(*first.table, cls);
        if (cls == ErrorClass::triple_error)
            CHECK_FALSE(undetected.empty());
        else
            CHECK(undetected.empty());
    }

    // subsumption: the structural facts alone force the subsumed classes clean
    StructuralProfile p = structural_profile(*first.table);
    CHECK(p.n_triples_all_distinct_symbols);
    CHECK(p.three_subset_unique);
    CHECK(p.diagonal_is_permutation);

    SolveResult second = solve(model, cfg);
    REQUIRE(second.table.has_value());
    CHECK(second.table->same_cells(*first.table));
}

TEST_CASE("zero budget means NotFound with zero steps") {
    SearchConfig cfg;
    cfg.max_steps = 0;
    SolveResult res = solve(build_model(10), cfg);
    CHECK_FALSE(res.table.has_value());
    CHECK(res.stats.steps == 0);
    CHECK_FALSE(res.stats.exhausted);
}

TEST_CASE("base 4 is proven infeasible, not timed out") {
    // 12 off-diagonal cells cannot fit into 4 three-subsets
    SearchConfig cfg;
    cfg.restart_interval = 1000000;  // let one tree run to completion
    cfg.time_budget = std::chrono::seconds(30);
    SolveResult res = solve(build_model(4), cfg);
    CHECK_FALSE(res.table.has_value());
    CHECK(res.stats.exhausted);
    CHECK(res.stats.steps > 0);
    CHECK(res.stats.deepest_level < 12);
}

// ---------------------------------------------------------------------------
// LP export: structure plus a tiny evaluator that replays the emitted
// constraints against a concrete table's indicator vector.
// ---------------------------------------------------------------------------

namespace {

struct LpConstraint {
    std::string name;
    std::vector<std::array<int, 3>> terms;  // (r, c, s) per x_r_c_s
    std::string op;                         // "<=", ">=", "="
    int rhs = 0;
};

std::vector<LpConstraint> parse_lp_constraints(const std::string& text) {
    std::vector<LpConstraint> out;
    std::istringstream in(text);
    std::string line;
    bool in_constraints = false;
    while (std::getline(in, line)) {
        if (line == "Subject To") {
            in_constraints = true;
            continue;
        }
        if (line == "Binary" || line == "Bounds" || line == "End") in_constraints = false;
        if (!in_constraints) continue;

        LpConstraint c;
        auto colon = line.find(':');
        REQUIRE(colon != std::string::npos);
        c.name = line.substr(1, colon - 1);
        std::string rest = line.substr(colon + 1);

        std::size_t oppos;
        if ((oppos = rest.find("<=")) != std::string::npos)
            c.op = "<=";
        else if ((oppos = rest.find(">=")) != std::string::npos)
            c.op = ">=";
        else {
            oppos = rest.find('=');
            REQUIRE(oppos != std::string::npos);
            c.op = "=";
        }
        c.rhs = std::stoi(rest.substr(oppos + c.op.size()));

        std::istringstream lhs(rest.substr(0, oppos));
        std::string tok;
        while (lhs >> tok) {
            if (tok == "+") continue;
            REQUIRE(tok.rfind("x_", 0) == 0);
            int r, cc, s;
            REQUIRE(sscanf(tok.c_str(), "x_%d_%d_%d", &r, &cc, &s) == 3);
            c.terms.push_back({r, cc, s});
        }
        out.push_back(std::move(c));
    }
    return out;
}

int violated_count(const std::vector<LpConstraint>& constraints, const CheckTable& t) {
    int bad = 0;
    for (const LpConstraint& c : constraints) {
        int sum = 0;
        for (const auto& [r, cc, s] : c.terms) sum += t.cell(r, cc) == s;
        bool ok = c.op == "<=" ? sum <= c.rhs : c.op == ">=" ? sum >= c.rhs : sum == c.rhs;
        bad += !ok;
    }
    return bad;
}

int count_prefix(const std::vector<LpConstraint>& constraints, const std::string& prefix) {
    return static_cast<int>(std::count_if(constraints.begin(), constraints.end(),
                                          [&](const LpConstraint& c) {
                                              return c.name.rfind(prefix, 0) == 0;
                                          }));
}

}  // namespace

TEST_CASE("exported LP model has the advertised shape") {
    std::string text = export_model(build_model(10));

    // 1000 indicator variables in the Binary section
    std::size_t binary = text.find("Binary");
    REQUIRE(binary != std::string::npos);
    int vars = 0;
    std::istringstream tail(text.substr(binary));
    for (std::string line; std::getline(tail, line);)
        if (line.rfind(" x_", 0) == 0) ++vars;
    CHECK(vars == 1000);

    auto constraints = parse_lp_constraints(text);
    CHECK(count_prefix(constraints, "cell_") == 100);
    CHECK(count_prefix(constraints, "rowsym_") == 100);
    CHECK(count_prefix(constraints, "colsym_") == 100);
    CHECK(count_prefix(constraints, "diag_") == 10);
    CHECK(count_prefix(constraints, "offdiag_") == 90);
    CHECK(count_prefix(constraints, "subset_") == 120);
    CHECK(count_prefix(constraints, "phon_") == 480);
    for (const LpConstraint& c : constraints)
        if (c.name.rfind("subset_", 0) == 0) {
            CHECK(c.terms.size() == 6);
            CHECK(c.op == "<=");
            CHECK(c.rhs == 1);
        }
}

TEST_CASE("emitted inequalities hold for dunning-t3 and fail for verhoeff-regular") {
    auto constraints = parse_lp_constraints(export_model(build_model(10)));
    CHECK(violated_count(constraints, builtin_table("dunning-t3")) == 0);
    CHECK(violated_count(constraints, builtin_table("verhoeff-regular")) > 0);
    CHECK(violated_count(constraints, builtin_table("verhoeff-irregular")) > 0);
}
