#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace pav {

// Classification of a tunnel of a Dyck path of semilength n by the integer
// midpoint m = (start_x + end_x) / 2: centered means m = n; left means m < n,
// right means m > n. A non-centered tunnel is "across" iff start_x < n < end_x,
// otherwise "side" (the segment then lies entirely in one half plane).
enum class TunnelClass { left_side, left_across, centered, right_across, right_side };

std::string to_string(TunnelClass c);

// Horizontal segment joining the start of an up-step to the end of its
// matching down-step. start_x/end_x are abscissas in [0, 2n]; end_x - start_x
// is even and positive; height is the path height at both endpoints, and the
// path stays strictly above that height in between.
struct Tunnel {
    int start_x = 0;
    int end_x = 0;
    int height = 0;
    TunnelClass cls = TunnelClass::centered;

    friend bool operator==(const Tunnel&, const Tunnel&) = default;
};

// Dyck path of semilength n: a word over {u, d} of length 2n with every
// prefix containing at least as many u's as d's. The empty path is legal.
class DyckPath {
public:
    DyckPath() = default;

    // Accepts case-insensitive u/d words; whitespace is ignored. Throws
    // std::invalid_argument: "bad-character ..." (with the 1-based position in
    // the input), "negative-prefix at x=..." (first step below the axis) or
    // "unbalanced: final height ...".
    static DyckPath parse(std::string_view text);

    int semilength() const { return static_cast<int>(steps_.size()) / 2; }
    int length() const { return static_cast<int>(steps_.size()); }
    bool empty() const { return steps_.empty(); }

    // 1-based step index.
    bool up_at(int k) const { return steps_[static_cast<std::size_t>(k) - 1] == 'u'; }

    // Canonical lowercase word.
    const std::string& word() const { return steps_; }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

private:
    std::string steps_;
};

// All n tunnels (one per up-step), sorted by start_x. Single stack scan, O(n).
std::vector<Tunnel> tunnels(const DyckPath& path);

struct TunnelCounts {
    int centered = 0;
    int right_side = 0;
    int right_across = 0;
    int left_side = 0;
    int left_across = 0;

    int ct() const { return centered; }
    int rt() const { return right_side + right_across; }
    int lt() const { return left_side + left_across; }

    friend bool operator==(const TunnelCounts&, const TunnelCounts&) = default;
};

TunnelCounts tunnel_counts(const DyckPath& path);

int ct(const DyckPath& path);
int rt(const DyckPath& path);
int lt(const DyckPath& path);
int right_side(const DyckPath& path);
int right_across(const DyckPath& path);
int left_side(const DyckPath& path);
int left_across(const DyckPath& path);

// Height after x steps, 0 <= x <= 2n.
int height_at(const DyckPath& path, int x);

// Height at the center x = n. Always has the parity of n; 0 for the empty path.
int he(const DyckPath& path);

// Height at x = n - c; requires |c| <= n - 1.
int he_c(const DyckPath& path, int c);

// Reverse the word and swap u <-> d. An involution; fixes ct and exchanges
// the left/right tunnel counts classwise.
DyckPath reflect(const DyckPath& path);

// Visits all C_n Dyck paths of semilength n in lexicographic word order
// ('d' < 'u').
void enumerate_paths(int n, const std::function<void(const DyckPath&)>& visit);

std::vector<DyckPath> list_paths(int n);

} // namespace pav
