#include "pav/perm.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pav {

namespace {

void check_is_permutation(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : values) {
        if (v == 0)
            throw std::invalid_argument("permutation: zero value");
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                        " out of range for n=" + std::to_string(n));
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation: duplicate value " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    check_is_permutation(values_);
}

Permutation Permutation::identity(int n) {
    if (n < 0)
        throw std::invalid_argument("permutation: negative length");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = i + 1;
    Permutation p;
    p.values_ = std::move(v);
    return p;
}

Permutation Permutation::parse(std::string_view text) {
    if (is_blank(text))
        return Permutation{};
    std::vector<int> values;
    std::size_t start = 0;
    int token_index = 0;
    while (true) {
        ++token_index;
        std::size_t comma = text.find(',', start);
        std::string_view token = trim(
            text.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (token.empty())
            throw std::invalid_argument("permutation: empty token at position " +
                                        std::to_string(token_index));
        bool digits = std::all_of(token.begin(), token.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        });
        if (!digits || token.size() > 9)
            throw std::invalid_argument("permutation: bad token '" + std::string(token) +
                                        "' at position " + std::to_string(token_index));
        int v = 0;
        for (char c : token)
            v = v * 10 + (c - '0');
        values.push_back(v);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
    const int n = size();
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
    Permutation p;
    p.values_ = std::move(inv);
    return p;
}

bool Permutation::is_involution() const {
    const int n = size();
    for (int i = 1; i <= n; ++i)
        if ((*this)((*this)(i)) != i)
            return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

int fixed_points(const Permutation& sigma) {
    int c = 0;
    for (int i = 1; i <= sigma.size(); ++i)
        c += sigma(i) == i;
    return c;
}

int excedances(const Permutation& sigma) {
    int c = 0;
    for (int i = 1; i <= sigma.size(); ++i)
        c += sigma(i) > i;
    return c;
}

int antiexcedances(const Permutation& sigma) {
    int c = 0;
    for (int i = 1; i <= sigma.size(); ++i)
        c += sigma(i) < i;
    return c;
}

int lis(const Permutation& sigma) {
    // patience: tails[k] = smallest possible last value of an increasing
    // subsequence of length k+1
    std::vector<int> tails;
    for (int v : sigma.values()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

int rank(const Permutation& sigma) {
    // min over the prefix is non-increasing, so the predicate min > k fails
    // permanently once it fails
    const int n = sigma.size();
    int best = 0;
    int prefix_min = n + 1;
    for (int k = 1; k <= n; ++k) {
        prefix_min = std::min(prefix_min, sigma(k));
        if (prefix_min > k)
            best = k;
        else
            break;
    }
    return best;
}

namespace {

// Extends a partial embedding of pat into sig. picked[s] holds the sig value
// chosen for pattern position s < t; the next candidate is taken at index
// >= from and must sit in the same relative order as pat[t] against all
// earlier picks.
bool extend_embedding(const std::vector<int>& sig, const std::vector<int>& pat,
                      std::vector<int>& picked, std::size_t t, std::size_t from) {
    if (t == pat.size())
        return true;
    const std::size_t need = pat.size() - t;
    for (std::size_t i = from; i + need <= sig.size(); ++i) {
        const int v = sig[i];
        bool ok = true;
        for (std::size_t s = 0; s < t; ++s) {
            if ((pat[s] < pat[t]) != (picked[s] < v)) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        picked[t] = v;
        if (extend_embedding(sig, pat, picked, t + 1, i + 1))
            return true;
    }
    return false;
}

// Would appending v to prefix complete an occurrence of pat ending at the new
// element? The new element necessarily plays the last pattern position.
bool completes_occurrence(const std::vector<int>& prefix, const std::vector<int>& pat,
                          std::vector<int>& picked, int v, std::size_t t, std::size_t from) {
    const std::size_t m = pat.size();
    if (t + 1 == m)
        return true;
    const std::size_t need = m - 1 - t;
    for (std::size_t i = from; i + need <= prefix.size(); ++i) {
        const int w = prefix[i];
        if ((pat[t] < pat[m - 1]) != (w < v))
            continue;
        bool ok = true;
        for (std::size_t s = 0; s < t; ++s) {
            if ((pat[s] < pat[t]) != (picked[s] < w)) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        picked[t] = w;
        if (completes_occurrence(prefix, pat, picked, v, t + 1, i + 1))
            return true;
    }
    return false;
}

} // namespace

bool contains(const Permutation& sigma, const Pattern& pi) {
    if (pi.size() > sigma.size())
        return false;
    if (pi.size() == 0)
        return true;
    std::vector<int> picked(static_cast<std::size_t>(pi.size()), 0);
    return extend_embedding(sigma.values(), pi.values(), picked, 0, 0);
}

bool avoids(const Permutation& sigma, const Pattern& pi) {
    return !contains(sigma, pi);
}

void enumerate_avoiding(int n, const Pattern& pi, const EnumerationFilters& filters,
                        const std::function<void(const Permutation&)>& visit) {
    if (n < 0)
        throw std::invalid_argument("enumerate_avoiding: negative n");
    if (pi.size() == 0)
        return; // the empty pattern occurs in everything
    const std::vector<int>& pat = pi.values();
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> picked(pat.size(), 0);

    auto rec = [&](auto&& self, int pos) -> void {
        if (pos > n) {
            Permutation sigma(prefix);
            if (filters.involutions_only && !sigma.is_involution())
                return;
            visit(sigma);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            if (filters.fixed_point_free && v == pos)
                continue;
            // cheap involution pruning; the leaf still re-checks
            if (filters.involutions_only && v < pos &&
                prefix[static_cast<std::size_t>(v) - 1] != pos)
                continue;
            if (completes_occurrence(prefix, pat, picked, v, 0, 0))
                continue;
            used[static_cast<std::size_t>(v)] = 1;
            prefix.push_back(v);
            self(self, pos + 1);
            prefix.pop_back();
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(rec, 1);
}

std::vector<Permutation> list_avoiding(int n, const Pattern& pi,
                                       const EnumerationFilters& filters) {
    std::vector<Permutation> out;
    enumerate_avoiding(n, pi, filters, [&](const Permutation& s) { out.push_back(s); });
    return out;
}

std::uint64_t count_avoiding(int n, const Pattern& pi, const EnumerationFilters& filters) {
    std::uint64_t c = 0;
    enumerate_avoiding(n, pi, filters, [&](const Permutation&) { ++c; });
    return c;
}

} // namespace pav
