#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace pav {

// Permutation of {1..n} in one-line notation. Positions and values are
// 1-indexed; n = 0 (the empty permutation) is legal everywhere.
class Permutation {
public:
    Permutation() = default;

    // Validates that `values` is a permutation of {1..n}; throws
    // std::invalid_argument naming the first offending value.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);

    // Text form: comma-separated decimal values, e.g. "2,3,5,1,4,6,8,7".
    // Whitespace around commas is ignored. Rejects duplicates, zeros and
    // out-of-range values; an empty (or all-whitespace) string parses to the
    // empty permutation.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }

    // sigma(i) with 1 <= i <= n.
    int operator()(int i) const { return values_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& values() const { return values_; }

    Permutation inverse() const;
    bool is_involution() const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

// A pattern is just a (usually short) permutation.
using Pattern = Permutation;

int fixed_points(const Permutation& sigma);   // #{i : sigma(i) = i}
int excedances(const Permutation& sigma);     // #{i : sigma(i) > i}
int antiexcedances(const Permutation& sigma); // #{i : sigma(i) < i}

// Length of the longest strictly increasing subsequence.
int lis(const Permutation& sigma);

// Largest k such that sigma(i) > k for all i <= k; 0 if sigma(1) = 1 or n = 0.
int rank(const Permutation& sigma);

// True iff some subsequence of sigma is order-isomorphic to pi.
// Total: pi longer than sigma simply yields false.
bool contains(const Permutation& sigma, const Pattern& pi);
bool avoids(const Permutation& sigma, const Pattern& pi);

struct EnumerationFilters {
    bool fixed_point_free = false;
    bool involutions_only = false;
};

// Visits every pi-avoiding element of S_n that passes the filters, in
// lexicographic order of one-line notation. Backtracks over prefixes, pruning
// as soon as a prefix would contain pi.
void enumerate_avoiding(int n, const Pattern& pi, const EnumerationFilters& filters,
                        const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> list_avoiding(int n, const Pattern& pi,
                                       const EnumerationFilters& filters = {});

std::uint64_t count_avoiding(int n, const Pattern& pi,
                             const EnumerationFilters& filters = {});

} // namespace pav
