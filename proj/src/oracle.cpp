#include "pav/oracle.hpp"

#include "pav/bijections.hpp"
#include "pav/dyck.hpp"
#include "pav/tableau.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <set>
#include <stdexcept>

namespace pav {

std::uint64_t catalan_number(int n) {
    if (n < 0)
        throw std::invalid_argument("catalan_number: negative n");
    if (n > 33)
        throw std::domain_error("catalan_number: n=" + std::to_string(n) +
                                " overflows 64 bits");
    std::uint64_t c = 1;
    for (int k = 0; k < n; ++k)
        c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (static_cast<std::uint64_t>(k) + 2);
    return c;
}

std::uint64_t fine_number(int n) {
    if (n < 0)
        throw std::invalid_argument("fine_number: negative n");
    if (n > 33)
        throw std::domain_error("fine_number: n=" + std::to_string(n) + " overflows 64 bits");
    // F_0 = 1, F_1 = 0, then F_n = (C_n - F_{n-1}) / 2 (the division is exact)
    std::uint64_t prev = 1;
    if (n == 0)
        return prev;
    std::uint64_t cur = 0;
    for (int k = 2; k <= n; ++k) {
        const std::uint64_t next = (catalan_number(k) - cur) / 2;
        prev = cur;
        cur = next;
    }
    (void)prev;
    return cur;
}

std::string to_string(Stat s) {
    switch (s) {
    case Stat::fp: return "fp";
    case Stat::exc: return "exc";
    case Stat::lis: return "lis";
    case Stat::rank: return "rank";
    }
    throw std::logic_error("stat");
}

Stat parse_stat(std::string_view name) {
    if (name == "fp")
        return Stat::fp;
    if (name == "exc")
        return Stat::exc;
    if (name == "lis")
        return Stat::lis;
    if (name == "rank")
        return Stat::rank;
    throw std::invalid_argument("unknown statistic '" + std::string(name) +
                                "' (expected fp, exc, lis or rank)");
}

int default_n_cap() {
    if (const char* env = std::getenv("PAV_N_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0 && v <= 33)
            return static_cast<int>(v);
    }
    return 11;
}

namespace {

int stat_value(Stat s, const Permutation& sigma) {
    switch (s) {
    case Stat::fp: return fixed_points(sigma);
    case Stat::exc: return excedances(sigma);
    case Stat::lis: return lis(sigma);
    case Stat::rank: return rank(sigma);
    }
    throw std::logic_error("stat");
}

void check_cap(int n, int cap, const char* what) {
    if (n < 0)
        throw std::invalid_argument(std::string(what) + ": negative n");
    if (n > cap)
        throw std::domain_error("n-over-cap: n=" + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap) + " (set PAV_N_CAP to raise it)");
}

std::string key_text(const std::vector<int>& key) {
    std::string out = "(";
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(key[i]);
    }
    out += ')';
    return out;
}

constexpr std::size_t kMaxCounterexamples = 20;

struct ReportBuilder {
    VerificationReport r;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::size_t dropped = 0;

    ReportBuilder(std::string name, int n_min, int n_max) {
        r.check_name = std::move(name);
        r.n_min = n_min;
        r.n_max = n_max;
    }

    void fail(std::string line) {
        if (r.counterexamples.size() < kMaxCounterexamples)
            r.counterexamples.push_back(std::move(line));
        else
            ++dropped;
    }

    void note(std::string line) { r.notes.push_back(std::move(line)); }

    VerificationReport finish() {
        if (dropped > 0)
            r.counterexamples.push_back("(" + std::to_string(dropped) +
                                        " further counterexamples suppressed)");
        r.passed = r.counterexamples.empty();
        r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0);
        return std::move(r);
    }
};

using KeyMap = std::map<std::vector<int>, std::uint64_t>;

const Pattern& pat_321() {
    static const Pattern p(std::vector<int>{3, 2, 1});
    return p;
}

const Pattern& pat_132() {
    static const Pattern p(std::vector<int>{1, 3, 2});
    return p;
}

std::vector<int> key_321(const Permutation& s) {
    return {fixed_points(s), excedances(s), lis(s)};
}

// The honest 132-side key and its deliberate corruptions.
std::vector<int> key_132(const Permutation& s, int n) {
    return {fixed_points(s), excedances(s), n - rank(s)};
}

std::vector<int> key_132_drop_flip(const Permutation& s, int) {
    return {fixed_points(s), excedances(s), rank(s)};
}

std::vector<int> key_132_swap_fp_exc(const Permutation& s, int n) {
    return {excedances(s), fixed_points(s), n - rank(s)};
}

std::string stats_text_321(const Permutation& s) {
    return "fp=" + std::to_string(fixed_points(s)) + " exc=" + std::to_string(excedances(s)) +
           " lis=" + std::to_string(lis(s));
}

std::string stats_text_132(const Permutation& s) {
    return "fp=" + std::to_string(fixed_points(s)) + " exc=" + std::to_string(excedances(s)) +
           " rank=" + std::to_string(rank(s));
}

// First sigma in the filtered class whose key matches, with its path text.
std::string find_witness(int n, const Pattern& pi, const EnumerationFilters& filters,
                         const std::function<std::vector<int>(const Permutation&)>& key_of,
                         const std::vector<int>& key, bool via_knu) {
    std::string found;
    enumerate_avoiding(n, pi, filters, [&](const Permutation& s) {
        if (!found.empty() || key_of(s) != key)
            return;
        const DyckPath d = via_knu ? knu(s) : krar(s);
        found = "sigma=" + s.to_string() + " path=" + d.word() + " " +
                (via_knu ? stats_text_321(s) : stats_text_132(s));
    });
    return found.empty() ? "no witness" : found;
}

// Compares two keyed tables and reports each differing key with witnesses.
void compare_tables(ReportBuilder& rb, int n, const KeyMap& a, const KeyMap& b,
                    const EnumerationFilters& filters,
                    const std::function<std::vector<int>(const Permutation&)>& key_a,
                    const std::function<std::vector<int>(const Permutation&)>& key_b,
                    const char* side_a, const char* side_b) {
    auto report = [&](const std::vector<int>& key, std::uint64_t ca, std::uint64_t cb) {
        rb.fail("n=" + std::to_string(n) + " key=" + key_text(key) + ": " + side_a +
                " count=" + std::to_string(ca) + " vs " + side_b +
                " count=" + std::to_string(cb) + "; witness[" + side_a + "] " +
                find_witness(n, pat_321(), filters, key_a, key, true) + "; witness[" +
                side_b + "] " + find_witness(n, pat_132(), filters, key_b, key, false));
    };
    for (const auto& [key, ca] : a) {
        auto it = b.find(key);
        const std::uint64_t cb = it == b.end() ? 0 : it->second;
        if (ca != cb)
            report(key, ca, cb);
    }
    for (const auto& [key, cb] : b)
        if (a.find(key) == a.end())
            report(key, 0, cb);
}

VerificationReport run_refined(const std::string& name,
                               const std::function<std::vector<int>(const Permutation&, int)>& side_b_key,
                               const char* side_b_label, int n_max, int cap,
                               const EnumerationFilters& filters,
                               bool check_involution_images) {
    check_cap(n_max, cap, name.c_str());
    ReportBuilder rb(name, 0, n_max);
    for (int n = 0; n <= n_max; ++n) {
        KeyMap a, b;
        enumerate_avoiding(n, pat_321(), filters, [&](const Permutation& s) {
            if (check_involution_images && !theta(s).is_involution())
                rb.fail("n=" + std::to_string(n) + " sigma=" + s.to_string() +
                        " is an involution but theta(sigma)=" + theta(s).to_string() +
                        " is not");
            ++a[key_321(s)];
        });
        enumerate_avoiding(n, pat_132(), filters, [&](const Permutation& s) {
            if (check_involution_images && !theta_inverse(s).is_involution())
                rb.fail("n=" + std::to_string(n) + " sigma=" + s.to_string() +
                        " is an involution but theta_inverse(sigma)=" +
                        theta_inverse(s).to_string() + " is not");
            ++b[side_b_key(s, n)];
        });
        auto key_b = [&](const Permutation& s) { return side_b_key(s, n); };
        compare_tables(rb, n, a, b, filters, key_321, key_b, "321-side", side_b_label);
    }
    return rb.finish();
}

} // namespace

std::string compact_pattern_text(const Pattern& pi) {
    const auto& v = pi.values();
    const bool one_digit = std::all_of(v.begin(), v.end(), [](int x) { return x <= 9; });
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!one_digit && i)
            out += ';';
        out += std::to_string(v[i]);
    }
    return out;
}

std::uint64_t DistributionTable::total() const {
    std::uint64_t t = 0;
    for (const auto& [key, c] : counts)
        t += c;
    return t;
}

void DistributionTable::write_csv(std::ostream& os) const {
    os << "n,pattern";
    for (Stat s : stats)
        os << ',' << to_string(s);
    os << ",count\n";
    for (const auto& [key, c] : counts) {
        os << n << ',' << pattern;
        for (int v : key)
            os << ',' << v;
        os << ',' << c << '\n';
    }
}

void DistributionTable::write_json(std::ostream& os) const {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& [key, c] : counts) {
        nlohmann::ordered_json row;
        row["n"] = n;
        row["pattern"] = pattern;
        for (std::size_t i = 0; i < stats.size(); ++i)
            row[to_string(stats[i])] = key[i];
        row["count"] = c;
        rows.push_back(std::move(row));
    }
    os << rows.dump(2) << '\n';
}

DistributionTable distribution(int n, const Pattern& pi, const std::vector<Stat>& stats,
                               const EnumerationFilters& filters, int cap) {
    check_cap(n, cap, "distribution");
    if (stats.empty())
        throw std::invalid_argument("distribution: no statistics requested");
    for (std::size_t i = 0; i < stats.size(); ++i)
        for (std::size_t j = i + 1; j < stats.size(); ++j)
            if (stats[i] == stats[j])
                throw std::invalid_argument("distribution: duplicate statistic '" +
                                            to_string(stats[i]) + "'");
    DistributionTable t;
    t.n = n;
    t.pattern = compact_pattern_text(pi);
    t.stats = stats;
    enumerate_avoiding(n, pi, filters, [&](const Permutation& s) {
        std::vector<int> key;
        key.reserve(stats.size());
        for (Stat st : stats)
            key.push_back(stat_value(st, s));
        ++t.counts[key];
    });
    return t;
}

VerificationReport verify_theorem_refined(int n_max, int cap) {
    return run_refined("refined", key_132, "132-side", n_max, cap, {}, false);
}

VerificationReport verify_theorem_refined_corrupted(RefinedCorruption kind, int n_max,
                                                    int cap) {
    switch (kind) {
    case RefinedCorruption::drop_rank_flip:
        return run_refined("refined-corrupted-drop-rank-flip", key_132_drop_flip,
                           "132-side(raw rank)", n_max, cap, {}, false);
    case RefinedCorruption::swap_fp_exc:
        return run_refined("refined-corrupted-swap-fp-exc", key_132_swap_fp_exc,
                           "132-side(fp/exc swapped)", n_max, cap, {}, false);
    }
    throw std::logic_error("corruption kind");
}

VerificationReport verify_involutions(int n_max, int cap) {
    EnumerationFilters f;
    f.involutions_only = true;
    return run_refined("involutions", key_132, "132-side", n_max, cap, f, true);
}

VerificationReport verify_propositions(int n_max, int cap) {
    check_cap(n_max, cap, "propositions");
    ReportBuilder rb("props", 0, n_max);
    for (int n = 0; n <= n_max; ++n) {
        enumerate_avoiding(n, pat_321(), {}, [&](const Permutation& s) {
            const DyckPath d = knu(s);
            const TunnelCounts tc = tunnel_counts(d);
            const int h = he(d);
            if (fixed_points(s) != tc.ct() || excedances(s) != tc.rt() ||
                lis(s) != (n + h) / 2)
                rb.fail("prop-321 n=" + std::to_string(n) + " sigma=" + s.to_string() +
                        " knu=" + d.word() + " " + stats_text_321(s) +
                        " ct=" + std::to_string(tc.ct()) + " rt=" + std::to_string(tc.rt()) +
                        " (n+he)/2=" + std::to_string((n + h) / 2));
        });
        enumerate_avoiding(n, pat_132(), {}, [&](const Permutation& s) {
            const DyckPath d = krar(s);
            const TunnelCounts tc = tunnel_counts(d);
            const int h = he(d);
            if (fixed_points(s) != tc.ct() || excedances(s) != tc.rt() ||
                rank(s) != (n - h) / 2)
                rb.fail("prop-132 n=" + std::to_string(n) + " sigma=" + s.to_string() +
                        " krar=" + d.word() + " " + stats_text_132(s) +
                        " ct=" + std::to_string(tc.ct()) + " rt=" + std::to_string(tc.rt()) +
                        " (n-he)/2=" + std::to_string((n - h) / 2));
        });
    }
    return rb.finish();
}

VerificationReport verify_lemmas(int n_max, int cap) {
    check_cap(n_max, cap, "lemmas");
    ReportBuilder rb("lemmas", 0, n_max);
    std::uint64_t general_total = 0, general_matched_ok = 0, general_unmatched_ok = 0;
    std::string first_general_failure;
    for (int n = 0; n <= n_max; ++n) {
        enumerate_avoiding(n, pat_321(), {}, [&](const Permutation& s) {
            const Matching m = match_crosses(s);
            const auto pq = rsk(s);
            const DyckPath d = knu(s);
            const TunnelCounts tc = tunnel_counts(d);
            const int pairs = static_cast<int>(m.pairs.size());
            const int row2 = static_cast<int>(pq.first.row2().size());
            const int half_down = (n - he(d)) / 2;
            const int co_lis = n - lis(s);
            const bool matched_ok = pairs == row2 && pairs == tc.right_side &&
                                    pairs == tc.left_side && pairs == half_down &&
                                    pairs == co_lis;
            const bool unmatched_ok =
                static_cast<int>(m.unmatched_exc.size()) == tc.right_across &&
                static_cast<int>(m.unmatched_antiexc.size()) == tc.left_across;
            const std::string detail =
                "n=" + std::to_string(n) + " sigma=" + s.to_string() + " knu=" + d.word() +
                " pairs=" + std::to_string(pairs) + " |row2(P)|=" + std::to_string(row2) +
                " right-side=" + std::to_string(tc.right_side) +
                " left-side=" + std::to_string(tc.left_side) +
                " (n-he)/2=" + std::to_string(half_down) +
                " n-lis=" + std::to_string(co_lis) +
                " unmatched-exc=" + std::to_string(m.unmatched_exc.size()) +
                " right-across=" + std::to_string(tc.right_across) +
                " unmatched-antiexc=" + std::to_string(m.unmatched_antiexc.size()) +
                " left-across=" + std::to_string(tc.left_across);
            if (fixed_points(s) == 0) {
                if (!matched_ok)
                    rb.fail("matched-quantities " + detail);
                if (!unmatched_ok)
                    rb.fail("unmatched-quantities " + detail);
                const DyckPath rebuilt = path_from_matching(s);
                if (rebuilt != d)
                    rb.fail("path-from-matching n=" + std::to_string(n) + " sigma=" +
                            s.to_string() + " knu=" + d.word() + " rebuilt=" + rebuilt.word());
            } else {
                ++general_total;
                general_matched_ok += matched_ok;
                general_unmatched_ok += unmatched_ok;
                if ((!matched_ok || !unmatched_ok) && first_general_failure.empty())
                    first_general_failure = detail;
            }
        });
    }
    if (general_total > 0) {
        rb.note("exploratory (not asserted): count identities on 321-avoiders with fixed "
                "points, n<=" + std::to_string(n_max) + ": matched " +
                std::to_string(general_matched_ok) + "/" + std::to_string(general_total) +
                ", unmatched " + std::to_string(general_unmatched_ok) + "/" +
                std::to_string(general_total));
        if (!first_general_failure.empty())
            rb.note("exploratory first divergence: " + first_general_failure);
    }
    return rb.finish();
}

VerificationReport verify_roundtrips(int n_max, int cap) {
    check_cap(n_max, cap, "roundtrips");
    ReportBuilder rb("roundtrip", 0, n_max);
    struct Side {
        const char* fwd_name;
        const Pattern& pi;
        DyckPath (*fwd)(const Permutation&);
        Permutation (*inv)(const DyckPath&);
    };
    const Side sides[2] = {{"knu", pat_321(), &knu, &knu_inverse},
                           {"krar", pat_132(), &krar, &krar_inverse}};
    for (int n = 0; n <= n_max; ++n) {
        const std::uint64_t expected = catalan_number(n);
        for (const Side& side : sides) {
            std::set<std::string> image;
            std::uint64_t total = 0;
            enumerate_avoiding(n, side.pi, {}, [&](const Permutation& s) {
                ++total;
                try {
                    const DyckPath d = side.fwd(s);
                    image.insert(d.word());
                    const Permutation back = side.inv(d);
                    if (back != s)
                        rb.fail(std::string(side.fwd_name) + "-then-inverse n=" +
                                std::to_string(n) + " sigma=" + s.to_string() + " path=" +
                                d.word() + " came back as " + back.to_string());
                } catch (const std::exception& e) {
                    rb.fail(std::string(side.fwd_name) + " n=" + std::to_string(n) +
                            " sigma=" + s.to_string() + " raised: " + e.what());
                }
            });
            if (total != expected || image.size() != expected)
                rb.fail(std::string(side.fwd_name) + " image n=" + std::to_string(n) +
                        ": class size " + std::to_string(total) + ", distinct paths " +
                        std::to_string(image.size()) + ", expected C_n=" +
                        std::to_string(expected));
            enumerate_paths(n, [&](const DyckPath& d) {
                try {
                    const Permutation s = side.inv(d);
                    const DyckPath again = side.fwd(s);
                    if (again != d)
                        rb.fail(std::string(side.fwd_name) + "-inverse-then-forward n=" +
                                std::to_string(n) + " path=" + d.word() + " sigma=" +
                                s.to_string() + " came back as " + again.word());
                } catch (const std::exception& e) {
                    rb.fail(std::string(side.fwd_name) + "-inverse n=" + std::to_string(n) +
                            " path=" + d.word() + " raised: " + e.what());
                }
            });
        }
    }
    return rb.finish();
}

VerificationReport verify_duality_schensted(int n_max, int cap) {
    check_cap(n_max, cap, "duality");
    ReportBuilder rb("duality", 0, n_max);
    for (int n = 0; n <= n_max; ++n) {
        enumerate_avoiding(n, pat_321(), {}, [&](const Permutation& s) {
            const auto pq = rsk(s);
            const auto qp = rsk(s.inverse());
            if (qp.first != pq.second || qp.second != pq.first)
                rb.fail("duality n=" + std::to_string(n) + " sigma=" + s.to_string() +
                        ": rsk(inverse) is not (Q,P)");
            if (lis(s) != static_cast<int>(pq.first.row1().size()))
                rb.fail("schensted n=" + std::to_string(n) + " sigma=" + s.to_string() +
                        " lis=" + std::to_string(lis(s)) + " |row1(P)|=" +
                        std::to_string(pq.first.row1().size()));
        });
    }
    return rb.finish();
}

VerificationReport verify_fine(int n_max, int cap) {
    check_cap(n_max, cap, "fine");
    ReportBuilder rb("fine", 0, n_max);
    EnumerationFilters fp_free;
    fp_free.fixed_point_free = true;
    for (int n = 0; n <= n_max; ++n) {
        const std::uint64_t f = fine_number(n);
        const std::uint64_t c321 = count_avoiding(n, pat_321(), fp_free);
        const std::uint64_t c132 = count_avoiding(n, pat_132(), fp_free);
        std::uint64_t ct_free = 0;
        enumerate_paths(n, [&](const DyckPath& d) { ct_free += ct(d) == 0; });
        rb.note("n=" + std::to_string(n) + " F=" + std::to_string(f) + " fp-free-321=" +
                std::to_string(c321) + " fp-free-132=" + std::to_string(c132) +
                " ct-free-paths=" + std::to_string(ct_free));
        if (c321 != f || c132 != f || ct_free != f)
            rb.fail("fine n=" + std::to_string(n) + " F=" + std::to_string(f) +
                    " fp-free-321=" + std::to_string(c321) + " fp-free-132=" +
                    std::to_string(c132) + " ct-free-paths=" + std::to_string(ct_free));
    }
    return rb.finish();
}

} // namespace pav
