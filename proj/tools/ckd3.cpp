// Command-line front end: verify tables against the error families, generate
// new permutation-free tables, and drive the conjugate/relabel/codec
// operations. Exit codes: 0 pass, 1 detection failure, 2 input error,
// 3 search exhausted.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ckd3/codec.hpp"
#include "ckd3/conjugacy.hpp"
#include "ckd3/errors.hpp"
#include "ckd3/generator.hpp"
#include "ckd3/report_json.hpp"
#include "ckd3/table.hpp"
#include "ckd3/triples.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitDetect = 1;
constexpr int kExitInput = 2;
constexpr int kExitSearch = 3;

struct TableArgs {
    std::string file;
    std::string builtin;
};

void add_table_options(CLI::App* cmd, TableArgs& args) {
    auto* file = cmd->add_option("table", args.file, "table file to read");
    auto* builtin =
        cmd->add_option("--builtin", args.builtin,
                        "builtin table: verhoeff-regular, verhoeff-irregular, dunning-t3");
    file->excludes(builtin);
}

ckd3::CheckTable resolve_table(const TableArgs& args) {
    if (!args.builtin.empty()) return ckd3::builtin_table(args.builtin);
    if (!args.file.empty()) return ckd3::load_table_file(args.file);
    throw std::invalid_argument("give a table file or --builtin NAME");
}

ckd3::PhoneticRange parse_range(const std::string& s) {
    if (s == "full") return ckd3::PhoneticRange::full;
    if (s == "literal") return ckd3::PhoneticRange::literal;
    throw std::invalid_argument("--phonetic-range must be full or literal");
}

void print_text_report(const ckd3::CheckTable& table,
                       const std::vector<ckd3::DetectionReport>& reports,
                       const std::vector<bool>& counts_for_exit) {
    std::printf("table: %s (base %d)\n", table.name().c_str(), table.base());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& rep = reports[i];
        const char* verdict = rep.clean() ? "PASS" : counts_for_exit[i] ? "FAIL" : "INFO";
        std::printf("%-24s %-4s undetected=%d", std::string(error_class_name(rep.error_class)).c_str(),
                    verdict, rep.pair_count());
        if (rep.structural_equivalent_passed.has_value())
            std::printf("  [structural: %s]",
                        *rep.structural_equivalent_passed ? "pass" : "fail");
        if (!rep.clean() && !counts_for_exit[i]) std::printf("  (not in exit status)");
        std::printf("\n");
        if (!rep.clean() && counts_for_exit[i]) {
            const std::size_t cap = 16;
            for (std::size_t k = 0; k < rep.undetected.size() && k < cap; ++k)
                std::printf("    (%s) <-> (%s)\n", ckd3::to_string(rep.undetected[k].a).c_str(),
                            ckd3::to_string(rep.undetected[k].b).c_str());
            if (rep.undetected.size() > cap)
                std::printf("    ... and %zu more\n", rep.undetected.size() - cap);
        }
    }
}

int run_verify(const TableArgs& targs, const std::vector<std::string>& class_names,
               const std::string& format, const std::string& range_name) {
    ckd3::CheckTable table = resolve_table(targs);
    ckd3::PhoneticRange range = parse_range(range_name);

    std::vector<ckd3::ErrorClass> classes;
    const bool explicit_classes = !class_names.empty();
    if (explicit_classes) {
        for (const std::string& name : class_names) {
            auto cls = ckd3::error_class_from_name(name);
            if (!cls) throw std::invalid_argument("unknown error class '" + name + "'");
            classes.push_back(*cls);
        }
    } else {
        classes.assign(ckd3::kAllErrorClasses.begin(), ckd3::kAllErrorClasses.end());
    }

    std::vector<ckd3::DetectionReport> reports;
    std::vector<bool> counts_for_exit;
    for (ckd3::ErrorClass cls : classes) {
        ckd3::DetectionReport rep = ckd3::detect(table, cls, range);
        ckd3::StructuralCheck sc = ckd3::structural_check(table, cls);
        if (sc.has_shortcut) rep.structural_equivalent_passed = sc.passed;
        reports.push_back(std::move(rep));
        // Triple errors are expected of every length-3 code; they only count
        // when asked for by name.
        counts_for_exit.push_back(cls != ckd3::ErrorClass::triple_error || explicit_classes);
    }

    bool ok = true;
    for (std::size_t i = 0; i < reports.size(); ++i)
        if (counts_for_exit[i] && !reports[i].clean()) ok = false;

    if (format == "json") {
        std::fputs(ckd3::report_json(table, reports).c_str(), stdout);
    } else if (format == "text") {
        print_text_report(table, reports, counts_for_exit);
        std::printf("result: %s\n", ok ? "PASS" : "FAIL");
    } else {
        throw std::invalid_argument("--format must be text or json");
    }
    return ok ? kExitPass : kExitDetect;
}

int run_report(const TableArgs& targs, const std::string& format,
               const std::string& range_name) {
    ckd3::CheckTable table = resolve_table(targs);
    std::vector<ckd3::DetectionReport> reports =
        ckd3::full_report(table, parse_range(range_name));
    if (format == "json") {
        std::fputs(ckd3::report_json(table, reports).c_str(), stdout);
    } else if (format == "text") {
        std::vector<bool> counts(reports.size(), true);
        counts.back() = false;  // triple
        print_text_report(table, reports, counts);
    } else {
        throw std::invalid_argument("--format must be text or json");
    }
    return kExitPass;
}

int run_generate(int base, std::uint64_t seed, double time_budget, long long max_steps,
                 int restart_interval, const std::string& range_name,
                 const std::string& export_path, const std::string& out_path) {
    ckd3::SearchConfig cfg;
    cfg.seed = seed;
    cfg.max_steps = max_steps;
    cfg.restart_interval = restart_interval;
    cfg.time_budget = std::chrono::duration<double>(time_budget);
    cfg.phonetic_range = parse_range(range_name);

    ckd3::ConstraintModel model = ckd3::build_model(base, cfg);
    if (!export_path.empty()) {
        std::ofstream out(export_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write model file: " + export_path);
        out << ckd3::export_model(model);
    }

    ckd3::SolveResult res = ckd3::solve(model, cfg);
    std::fprintf(stderr,
                 "search: steps=%lld backtracks=%lld deepest=%d restarts=%d time=%.3fs%s\n",
                 res.stats.steps, res.stats.backtracks, res.stats.deepest_level,
                 res.stats.restarts, res.stats.seconds,
                 res.stats.exhausted ? " (space exhausted)" : "");
    if (!res.table) {
        std::fprintf(stderr, "no table found within budget\n");
        return kExitSearch;
    }

    // solve() verified the table against the model and the full error suite.
    std::string text = ckd3::serialize_table(*res.table);
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write table file: " + out_path);
        out << text;
    }
    return kExitPass;
}

int run_conjugates(const TableArgs& targs, bool check_disjoint,
                   const std::string& out_prefix) {
    ckd3::CheckTable table = resolve_table(targs);
    std::vector<ckd3::CheckTable> conjugates = ckd3::six_conjugate_tables(table);

    for (std::size_t k = 0; k < conjugates.size(); ++k) {
        std::printf("t%zu role=%s name=%s\n", k,
                    std::string(ckd3::RolePermutation::all()[k].name()).c_str(),
                    conjugates[k].name().c_str());
        if (!out_prefix.empty())
            ckd3::write_table_file(conjugates[k], out_prefix + "_t" + std::to_string(k));
    }

    if (check_disjoint) {
        bool ok = true;
        std::vector<ckd3::TripleSystem> systems;
        systems.reserve(conjugates.size());
        for (const auto& ct : conjugates) systems.push_back(ckd3::to_triples(ct));
        const auto diagonal = systems.front().diagonal;
        for (std::size_t i = 0; i < systems.size(); ++i)
            for (std::size_t j = i + 1; j < systems.size(); ++j) {
                auto common = ckd3::pairwise_common(systems[i], systems[j]);
                if (common != diagonal) {
                    ok = false;
                    std::printf("t%zu ^ t%zu: %zu common triples (want the %zu diagonal ones)\n",
                                i, j, common.size(), diagonal.size());
                }
            }
        std::printf("disjointness: %s\n", ok ? "PASS" : "FAIL");
        if (!ok) return kExitDetect;
    }
    return kExitPass;
}

std::vector<int> parse_p01(const std::string& spec) {
    std::string s = spec;
    if (auto bar = s.find('|'); bar != std::string::npos) s = s.substr(bar + 1);
    if (s == "identity" || s == "01") return {0, 1};
    if (s == "10") return {1, 0};
    throw std::invalid_argument("--p01 must be identity, 01, 10, or 01|XY");
}

std::vector<int> parse_p29(const std::string& spec, int base) {
    std::string s = spec;
    if (auto bar = s.find('|'); bar != std::string::npos) s = s.substr(bar + 1);
    std::vector<int> images;
    if (s == "identity") {
        for (int d = 2; d < base; ++d) images.push_back(d);
        return images;
    }
    if (static_cast<int>(s.size()) != base - 2)
        throw std::invalid_argument("--p29 needs the images of 2.." + std::to_string(base - 1) +
                                    " as " + std::to_string(base - 2) + " digits");
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("--p29 must be digits");
        images.push_back(ch - '0');
    }
    return images;
}

int run_relabel(const TableArgs& targs, const std::string& p01_spec,
                const std::string& p29_spec, const std::string& out_path) {
    ckd3::CheckTable table = resolve_table(targs);
    std::vector<int> images = parse_p01(p01_spec);
    for (int v : parse_p29(p29_spec, table.base())) images.push_back(v);
    ckd3::CheckTable out_table = ckd3::relabel(table, ckd3::Relabeling::from_images(images));

    std::string text = ckd3::serialize_table(out_table);
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write table file: " + out_path);
        out << text;
    }
    return kExitPass;
}

int parse_digit_arg(const std::string& s) {
    if (s.size() == 1 && s[0] >= '0' && s[0] <= '9') return s[0] - '0';
    throw std::invalid_argument("expected a digit, got '" + s + "'");
}

int run_encode(const std::string& builtin, const std::vector<std::string>& args) {
    // Either <table> <r> <c> or --builtin NAME <r> <c>.
    TableArgs targs;
    targs.builtin = builtin;
    std::size_t first_digit = 0;
    if (builtin.empty()) {
        if (args.size() != 3)
            throw std::invalid_argument("encode needs <table> <r> <c> (or --builtin NAME <r> <c>)");
        targs.file = args[0];
        first_digit = 1;
    } else if (args.size() != 2) {
        throw std::invalid_argument("encode with --builtin needs exactly <r> <c>");
    }
    ckd3::CheckTable table = resolve_table(targs);
    int r = parse_digit_arg(args[first_digit]);
    int c = parse_digit_arg(args[first_digit + 1]);
    std::printf("%s\n", ckd3::to_string(ckd3::encode(table, r, c)).c_str());
    return kExitPass;
}

int run_complete(const TableArgs& targs, std::optional<int> p1, std::optional<int> p2,
                 std::optional<int> p3) {
    ckd3::CheckTable table = resolve_table(targs);
    ckd3::PartialWord partial;
    if (p1) partial.set(1, *p1);
    if (p2) partial.set(2, *p2);
    if (p3) partial.set(3, *p3);
    if (partial.assigned() != 2)
        throw std::invalid_argument("give exactly two of --pos1/--pos2/--pos3");
    std::printf("%s\n", ckd3::to_string(ckd3::complete(table, partial)).c_str());
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"length-3 check digit code toolkit"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the error-detection suite on a table");
    TableArgs verify_table;
    add_table_options(verify, verify_table);
    std::vector<std::string> verify_classes;
    std::string verify_format = "text";
    std::string verify_range = "full";
    verify->add_option("--classes", verify_classes, "classes to check (comma separated)")
        ->delimiter(',');
    verify->add_option("--format", verify_format, "text or json");
    verify->add_option("--phonetic-range", verify_range, "full or literal");

    // report
    auto* report = app.add_subcommand("report", "full machine-readable detection report");
    TableArgs report_table;
    add_table_options(report, report_table);
    std::string report_format = "json";
    std::string report_range = "full";
    report->add_option("--format", report_format, "json or text");
    report->add_option("--phonetic-range", report_range, "full or literal");

    // generate
    auto* generate = app.add_subcommand("generate", "search for a permutation-free table");
    int gen_base = 10;
    std::uint64_t gen_seed = 1;
    double gen_budget = 600.0;
    long long gen_max_steps = -1;
    int gen_restart = 2000;
    std::string gen_range = "full";
    std::string gen_export, gen_out;
    generate->add_option("--base", gen_base, "alphabet size (4..10)");
    generate->add_option("--seed", gen_seed, "search seed");
    generate->add_option("--time-budget", gen_budget, "seconds before giving up");
    generate->add_option("--max-steps", gen_max_steps, "assignment budget (-1: unlimited)");
    generate->add_option("--restart-interval", gen_restart, "dead ends per restart");
    generate->add_option("--phonetic-range", gen_range, "full or literal");
    generate->add_option("--export-model", gen_export, "write the LP model to this file");
    generate->add_option("--out", gen_out, "write the table here instead of stdout");

    // conjugates
    auto* conjugates = app.add_subcommand("conjugates", "emit the six conjugate tables");
    TableArgs conj_table;
    add_table_options(conjugates, conj_table);
    bool conj_check = false;
    std::string conj_prefix;
    conjugates->add_flag("--check-disjoint", conj_check,
                         "fail unless all pairwise intersections are exactly the diagonal");
    conjugates->add_option("--out-prefix", conj_prefix, "write <prefix>_t0 .. <prefix>_t5");

    // relabel
    auto* relabel = app.add_subcommand("relabel", "apply an admissible digit relabeling");
    TableArgs relabel_table;
    add_table_options(relabel, relabel_table);
    std::string p01 = "identity", p29 = "identity", relabel_out;
    relabel->add_option("--p01", p01, "identity, 01, or 10 (images of 0,1)");
    relabel->add_option("--p29", p29, "identity or the images of 2..base-1");
    relabel->add_option("--out", relabel_out, "write the table here instead of stdout");

    // encode
    auto* encode = app.add_subcommand("encode", "codeword for two information digits");
    std::string encode_builtin;
    std::vector<std::string> encode_args;
    encode->add_option("--builtin", encode_builtin,
                       "builtin table: verhoeff-regular, verhoeff-irregular, dunning-t3");
    encode->add_option("args", encode_args, "<table> <r> <c>, or <r> <c> with --builtin")
        ->expected(2, 3);

    // complete
    auto* complete = app.add_subcommand("complete", "fill in the third digit from any two");
    TableArgs complete_table;
    add_table_options(complete, complete_table);
    std::optional<int> pos1, pos2, pos3;
    complete->add_option("--pos1", pos1, "digit at position 1");
    complete->add_option("--pos2", pos2, "digit at position 2");
    complete->add_option("--pos3", pos3, "digit at position 3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (app.got_subcommand(verify))
            return run_verify(verify_table, verify_classes, verify_format, verify_range);
        if (app.got_subcommand(report))
            return run_report(report_table, report_format, report_range);
        if (app.got_subcommand(generate))
            return run_generate(gen_base, gen_seed, gen_budget, gen_max_steps, gen_restart,
                                gen_range, gen_export, gen_out);
        if (app.got_subcommand(conjugates))
            return run_conjugates(conj_table, conj_check, conj_prefix);
        if (app.got_subcommand(relabel))
            return run_relabel(relabel_table, p01, p29, relabel_out);
        if (app.got_subcommand(encode)) return run_encode(encode_builtin, encode_args);
        if (app.got_subcommand(complete))
            return run_complete(complete_table, pos1, pos2, pos3);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    }
    return kExitInput;
}
