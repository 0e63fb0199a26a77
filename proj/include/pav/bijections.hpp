#pragma once

#include "pav/dyck.hpp"
#include "pav/perm.hpp"

#include <utility>
#include <vector>

namespace pav {

// Pairing between excedance and antiexcedance positions of a 321-avoiding
// permutation; fixed points take part in neither list. Every pair (i, j)
// satisfies i < j and sigma(i) > sigma(j).
struct Matching {
    std::vector<std::pair<int, int>> pairs; // (excedance pos, antiexcedance pos)
    std::vector<int> unmatched_exc;
    std::vector<int> unmatched_antiexc;

    friend bool operator==(const Matching&, const Matching&) = default;
};

// 321-avoiders -> Dyck paths, via the two-row insertion tableaux: the first
// half records the row of each value in P (u for row 1), the second half is
// the reverse-complement of the same word taken from Q.
// Throws "not-321-avoiding: ..." otherwise.
DyckPath knu(const Permutation& sigma);

Permutation knu_inverse(const DyckPath& path);

// 132-avoiders -> Dyck paths, via the staircase diagram
// lambda_i = #{j : sigma(i) > j and sigma^-1(j) > i}: emits, for i = n..1, one
// up-step followed by lambda_{i-1} - lambda_i down-steps (lambda_0 = n).
// Throws "not-132-avoiding: ..." otherwise.
DyckPath krar(const Permutation& sigma);

Permutation krar_inverse(const DyckPath& path);

// krar_inverse(knu(sigma)): 321-avoiders -> 132-avoiders. Preserves fixed
// points and excedances and sends lis to n - rank.
Permutation theta(const Permutation& sigma);

// knu_inverse(krar(sigma)): 132-avoiders -> 321-avoiders.
Permutation theta_inverse(const Permutation& sigma);

// Two-pointer pass over excedances and antiexcedances, both taken in
// increasing order of value. Skips the antiexcedance when its position is
// smaller than the current excedance position, skips the excedance when its
// value is smaller than the current antiexcedance value, matches otherwise.
// Throws "not-321-avoiding: ..." for inputs containing 321.
Matching match_crosses(const Permutation& sigma);

// Rebuilds knu(sigma) directly from match_crosses(sigma), without tableaux:
// left half over columns j = 1..n (d exactly at matched excedance values),
// right half built right-to-left over rows i = 1..n (u exactly at matched
// antiexcedance positions). Requires sigma 321-avoiding and fixed-point-free;
// throws "not-321-avoiding: ..." or "has-fixed-points: ...".
DyckPath path_from_matching(const Permutation& sigma);

} // namespace pav
