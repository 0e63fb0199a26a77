#pragma once

#include "pav/perm.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pav {

// Exact values; both guard against 64-bit overflow (n <= 33).
std::uint64_t catalan_number(int n);

// F_0 = 1, F_1 = 0, F_2 = 1, and C_n = 2 F_n + F_{n-1} for n >= 1.
// Counts the fixed-point-free permutations in S_n(321) (equivalently in
// S_n(132)) and the Dyck paths of semilength n without centered tunnels.
std::uint64_t fine_number(int n);

enum class Stat { fp, exc, lis, rank };

std::string to_string(Stat s);
Stat parse_stat(std::string_view name); // throws on unknown name

// Exhaustive sweeps refuse n beyond this cap. 11 unless the PAV_N_CAP
// environment variable overrides it.
int default_n_cap();

// Exact joint distribution of statistics over a (filtered) avoidance class.
// Keys are statistic value tuples in the declared stat order; the map keeps
// them sorted lexicographically.
struct DistributionTable {
    int n = 0;
    std::string pattern;            // compact text, e.g. "321"
    std::vector<Stat> stats;
    std::map<std::vector<int>, std::uint64_t> counts;

    std::uint64_t total() const;

    // Header "n,pattern,<stat names...>,count", one row per key.
    void write_csv(std::ostream& os) const;

    // Array of flat objects with the same fields as the CSV columns.
    void write_json(std::ostream& os) const;

    friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

// Compact pattern text used in tables: digits concatenated when all values
// are single-digit ("321"), semicolon-separated otherwise.
std::string compact_pattern_text(const Pattern& pi);

// Throws std::domain_error "n-over-cap: ..." when n > cap.
DistributionTable distribution(int n, const Pattern& pi, const std::vector<Stat>& stats,
                               const EnumerationFilters& filters = {},
                               int cap = default_n_cap());

struct VerificationReport {
    std::string check_name;
    int n_min = 0;
    int n_max = 0;
    bool passed = false;
    std::vector<std::string> counterexamples; // empty iff passed
    std::vector<std::string> notes;           // informational only
    std::chrono::milliseconds elapsed{0};
};

// Each sweep covers n = 0..n_max and throws "n-over-cap: ..." if n_max > cap.
// Reports are deterministic for fixed inputs (except the elapsed field).

// Joint (fp, exc, lis) over S_n(321) equals joint (fp, exc, n - rank) over
// S_n(132).
VerificationReport verify_theorem_refined(int n_max, int cap = default_n_cap());

// Elementwise over both classes: fp = ct, exc = rt, and lis = (n + he)/2 on
// the 321 side via knu; fp = ct, exc = rt, and rank = (n - he)/2 on the 132
// side via krar.
VerificationReport verify_propositions(int n_max, int cap = default_n_cap());

// On fixed-point-free 321-avoiders: the matched-pair count equals |row 2 of
// P|, the right-side and left-side tunnel counts of knu(sigma), (n - he)/2 and
// n - lis; unmatched excedances = right-across tunnels and unmatched
// antiexcedances = left-across tunnels; path_from_matching(sigma) = knu(sigma).
// Also runs the same count identities on permutations with fixed points and
// records the outcome as a note without asserting it.
VerificationReport verify_lemmas(int n_max, int cap = default_n_cap());

// knu/knu_inverse and krar/krar_inverse are mutually inverse bijections onto
// the Dyck paths: both round trips are identities and each image has
// cardinality C_n with no collisions.
VerificationReport verify_roundtrips(int n_max, int cap = default_n_cap());

// rsk(sigma^-1) = (Q, P) and lis(sigma) = |row 1 of P| on S_n(321).
VerificationReport verify_duality_schensted(int n_max, int cap = default_n_cap());

// Fixed-point-free counts in S_n(321) and S_n(132) and the count of Dyck
// paths without centered tunnels all equal F_n. Notes carry the per-n values.
VerificationReport verify_fine(int n_max, int cap = default_n_cap());

// theta maps involutions to involutions in both directions, and the joint
// (fp, exc, lis) table over 321-avoiding involutions equals the joint
// (fp, exc, n - rank) table over 132-avoiding involutions.
VerificationReport verify_involutions(int n_max, int cap = default_n_cap());

// Deliberately wrong pairings for the refined comparison; used as negative
// controls. Each is expected to FAIL with concrete counterexamples.
enum class RefinedCorruption {
    drop_rank_flip, // key the 132 side by raw rank instead of n - rank
    swap_fp_exc,    // swap the fp and exc key columns on the 132 side
};

VerificationReport verify_theorem_refined_corrupted(RefinedCorruption kind, int n_max,
                                                    int cap = default_n_cap());

} // namespace pav
