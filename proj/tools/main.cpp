#include "pav/bijections.hpp"
#include "pav/dyck.hpp"
#include "pav/oracle.hpp"
#include "pav/perm.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

// Pattern arguments accept the compact digit form ("321") as well as the
// comma-separated form ("3,2,1").
pav::Pattern parse_pattern_arg(const std::string& text) {
    if (text.find(',') == std::string::npos && !text.empty() &&
        std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        std::vector<int> values;
        values.reserve(text.size());
        for (char c : text)
            values.push_back(c - '0');
        return pav::Pattern(std::move(values));
    }
    return pav::Pattern::parse(text);
}

std::vector<pav::Stat> parse_stats_arg(const std::string& text) {
    std::vector<pav::Stat> stats;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        stats.push_back(pav::parse_stat(text.substr(
            start, comma == std::string::npos ? comma : comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return stats;
}

int run_stats(const std::string& perm_text) {
    const pav::Permutation s = pav::Permutation::parse(perm_text);
    std::cout << "n=" << s.size() << " fp=" << pav::fixed_points(s)
              << " exc=" << pav::excedances(s) << " antiexc=" << pav::antiexcedances(s)
              << " lis=" << pav::lis(s) << " rank=" << pav::rank(s)
              << " involution=" << (s.is_involution() ? "true" : "false") << '\n';
    return 0;
}

int run_map(const std::string& via, const std::string& input) {
    if (via == "knu")
        std::cout << pav::knu(pav::Permutation::parse(input)).word() << '\n';
    else if (via == "krar")
        std::cout << pav::krar(pav::Permutation::parse(input)).word() << '\n';
    else if (via == "theta")
        std::cout << pav::theta(pav::Permutation::parse(input)).to_string() << '\n';
    else if (via == "knu-inv")
        std::cout << pav::knu_inverse(pav::DyckPath::parse(input)).to_string() << '\n';
    else if (via == "krar-inv")
        std::cout << pav::krar_inverse(pav::DyckPath::parse(input)).to_string() << '\n';
    else if (via == "theta-inv")
        std::cout << pav::theta_inverse(pav::Permutation::parse(input)).to_string() << '\n';
    else
        throw std::invalid_argument("unknown map '" + via +
                                    "' (expected knu, krar, theta, knu-inv, krar-inv or "
                                    "theta-inv)");
    return 0;
}

int run_tunnels(const std::string& word) {
    const pav::DyckPath d = pav::DyckPath::parse(word);
    for (const pav::Tunnel& t : pav::tunnels(d))
        std::cout << t.start_x << ' ' << t.end_x << ' ' << t.height << ' '
                  << pav::to_string(t.cls) << '\n';
    const pav::TunnelCounts tc = pav::tunnel_counts(d);
    std::cout << "ct=" << tc.ct() << " rt=" << tc.rt() << " (side=" << tc.right_side
              << " across=" << tc.right_across << ") lt=" << tc.lt() << " he=" << pav::he(d)
              << '\n';
    return 0;
}

void check_cli_cap(int n) {
    const int cap = pav::default_n_cap();
    if (n > cap)
        throw std::domain_error("n-over-cap: n=" + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap) + " (set PAV_N_CAP to raise it)");
    if (n > 11)
        std::cerr << "warning: n=" << n << " sweeps may be slow\n";
}

int run_enumerate(int n, const std::string& avoid, bool fp_free, bool involutions,
                  bool count_only) {
    check_cli_cap(n);
    const pav::Pattern pi = parse_pattern_arg(avoid);
    pav::EnumerationFilters filters;
    filters.fixed_point_free = fp_free;
    filters.involutions_only = involutions;
    if (count_only) {
        std::cout << pav::count_avoiding(n, pi, filters) << '\n';
        return 0;
    }
    pav::enumerate_avoiding(n, pi, filters, [](const pav::Permutation& s) {
        std::cout << s.to_string() << '\n';
    });
    return 0;
}

int run_table(int n, const std::string& avoid, const std::string& stats_text,
              const std::string& format, bool fp_free, bool involutions) {
    if (format != "csv" && format != "json")
        throw std::invalid_argument("unknown format '" + format + "' (expected csv or json)");
    const pav::Pattern pi = parse_pattern_arg(avoid);
    pav::EnumerationFilters filters;
    filters.fixed_point_free = fp_free;
    filters.involutions_only = involutions;
    const pav::DistributionTable t =
        pav::distribution(n, pi, parse_stats_arg(stats_text), filters);
    if (format == "csv")
        t.write_csv(std::cout);
    else
        t.write_json(std::cout);
    return 0;
}

void print_report(const pav::VerificationReport& r) {
    std::cout << r.check_name << " max_n=" << r.n_max << ": "
              << (r.passed ? "pass" : "fail");
    if (!r.passed)
        std::cout << " (" << r.counterexamples.size() << " counterexamples)";
    std::cout << '\n';
    for (const std::string& note : r.notes)
        std::cout << r.check_name << " note " << note << '\n';
    for (const std::string& cx : r.counterexamples)
        std::cout << r.check_name << " counterexample " << cx << '\n';
    std::cerr << "# " << r.check_name << ": " << r.elapsed.count() << " ms\n";
}

int run_verify(const std::string& check, int max_n, const std::string& report_file) {
    check_cli_cap(max_n);
    std::vector<pav::VerificationReport> reports;
    const bool all = check == "all";
    if (all || check == "refined")
        reports.push_back(pav::verify_theorem_refined(max_n));
    if (all || check == "props")
        reports.push_back(pav::verify_propositions(max_n));
    if (all || check == "lemmas")
        reports.push_back(pav::verify_lemmas(max_n));
    if (all || check == "roundtrip")
        reports.push_back(pav::verify_roundtrips(max_n));
    if (all || check == "duality")
        reports.push_back(pav::verify_duality_schensted(max_n));
    if (all || check == "fine")
        reports.push_back(pav::verify_fine(max_n));
    if (all || check == "involutions")
        reports.push_back(pav::verify_involutions(max_n));
    if (check == "negative-control") {
        // deliberately corrupted comparisons; failing here is the expected
        // outcome, so this check exits 1 by design
        reports.push_back(pav::verify_theorem_refined_corrupted(
            pav::RefinedCorruption::drop_rank_flip, max_n));
        reports.push_back(pav::verify_theorem_refined_corrupted(
            pav::RefinedCorruption::swap_fp_exc, max_n));
    }
    if (reports.empty())
        throw std::invalid_argument(
            "unknown check '" + check +
            "' (expected all, refined, props, lemmas, roundtrip, duality, fine, "
            "involutions or negative-control)");
    bool all_passed = true;
    for (const pav::VerificationReport& r : reports) {
        print_report(r);
        all_passed = all_passed && r.passed;
    }
    if (!report_file.empty()) {
        nlohmann::ordered_json doc;
        doc["check"] = check;
        doc["max_n"] = max_n;
        doc["checks"] = nlohmann::ordered_json::array();
        for (const pav::VerificationReport& r : reports) {
            nlohmann::ordered_json c;
            c["check"] = r.check_name;
            c["n_min"] = r.n_min;
            c["n_max"] = r.n_max;
            c["status"] = r.passed ? "pass" : "fail";
            c["counterexamples"] = r.counterexamples;
            c["notes"] = r.notes;
            c["elapsed_ms"] = r.elapsed.count();
            doc["checks"].push_back(std::move(c));
        }
        std::ofstream out(report_file);
        if (!out)
            throw std::runtime_error("cannot write report file '" + report_file + "'");
        out << doc.dump(2) << '\n';
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"statistics and Dyck-path bijections for 321- and 132-avoiding permutations"};
    app.require_subcommand(1);

    std::string stats_perm;
    CLI::App* c_stats = app.add_subcommand("stats", "print the statistics of a permutation");
    c_stats->add_option("perm", stats_perm, "permutation, e.g. 2,3,5,1,4,6,8,7")->required();

    std::string map_via, map_input;
    CLI::App* c_map = app.add_subcommand("map", "apply one of the bijections");
    c_map->add_option("--via", map_via,
                      "knu, krar, theta, knu-inv, krar-inv or theta-inv")
        ->required();
    c_map->add_option("input", map_input, "permutation, or u/d word for *-inv maps")
        ->required();

    std::string tunnels_word;
    CLI::App* c_tunnels =
        app.add_subcommand("tunnels", "list the tunnels of a Dyck path with a summary");
    c_tunnels->add_option("word", tunnels_word, "u/d word, e.g. uduuduududduuddd")
        ->required();

    int enum_n = 0;
    std::string enum_avoid;
    bool enum_fp_free = false, enum_involutions = false, enum_count_only = false;
    CLI::App* c_enum =
        app.add_subcommand("enumerate", "list an avoidance class in lexicographic order");
    c_enum->add_option("--n", enum_n, "permutation length")->required();
    c_enum->add_option("--avoid", enum_avoid, "pattern, e.g. 321 or 3,2,1")->required();
    c_enum->add_flag("--fp-free", enum_fp_free, "restrict to fixed-point-free permutations");
    c_enum->add_flag("--involutions", enum_involutions, "restrict to involutions");
    c_enum->add_flag("--count-only", enum_count_only, "print only the count");

    int table_n = 0;
    std::string table_avoid, table_stats, table_format = "csv";
    bool table_fp_free = false, table_involutions = false;
    CLI::App* c_table =
        app.add_subcommand("table", "joint distribution of statistics over a class");
    c_table->add_option("--n", table_n, "permutation length")->required();
    c_table->add_option("--avoid", table_avoid, "pattern, e.g. 321 or 3,2,1")->required();
    c_table->add_option("--stats", table_stats, "comma-separated subset of fp,exc,lis,rank")
        ->required();
    c_table->add_option("--format", table_format, "csv (default) or json");
    c_table->add_flag("--fp-free", table_fp_free, "restrict to fixed-point-free permutations");
    c_table->add_flag("--involutions", table_involutions, "restrict to involutions");

    std::string verify_check, verify_report;
    int verify_max_n = 8;
    CLI::App* c_verify =
        app.add_subcommand("verify", "exhaustively check the statistic correspondences");
    c_verify
        ->add_option("--check", verify_check,
                     "all, refined, props, lemmas, roundtrip, duality, fine, involutions "
                     "or negative-control (expected to fail)")
        ->required();
    c_verify->add_option("--max-n", verify_max_n, "sweep n = 0..max-n (default 8)");
    c_verify->add_option("--report", verify_report, "also write a JSON report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_stats)
            return run_stats(stats_perm);
        if (*c_map)
            return run_map(map_via, map_input);
        if (*c_tunnels)
            return run_tunnels(tunnels_word);
        if (*c_enum)
            return run_enumerate(enum_n, enum_avoid, enum_fp_free, enum_involutions,
                                 enum_count_only);
        if (*c_table)
            return run_table(table_n, table_avoid, table_stats, table_format, table_fp_free,
                             table_involutions);
        if (*c_verify)
            return run_verify(verify_check, verify_max_n, verify_report);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
