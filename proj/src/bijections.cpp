#include "pav/bijections.hpp"

#include "pav/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace pav {

namespace {

const Pattern& pattern_321() {
    static const Pattern p(std::vector<int>{3, 2, 1});
    return p;
}

const Pattern& pattern_132() {
    static const Pattern p(std::vector<int>{1, 3, 2});
    return p;
}

void require_avoids_321(const Permutation& sigma, const char* op) {
    if (contains(sigma, pattern_321()))
        throw std::invalid_argument(std::string("not-321-avoiding: ") + op +
                                    " requires a 321-avoiding permutation");
}

void require_avoids_132(const Permutation& sigma, const char* op) {
    if (contains(sigma, pattern_132()))
        throw std::invalid_argument(std::string("not-132-avoiding: ") + op +
                                    " requires a 132-avoiding permutation");
}

} // namespace

DyckPath knu(const Permutation& sigma) {
    auto [p, q] = rsk(sigma); // rejects non-321-avoiders
    const int n = sigma.size();
    std::vector<char> p_row2(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> q_row2(static_cast<std::size_t>(n) + 1, 0);
    for (int v : p.row2())
        p_row2[static_cast<std::size_t>(v)] = 1;
    for (int v : q.row2())
        q_row2[static_cast<std::size_t>(v)] = 1;
    std::string w;
    w.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i)
        w.push_back(p_row2[static_cast<std::size_t>(i)] ? 'd' : 'u');
    // reverse-complement of the word read off Q
    for (int i = n; i >= 1; --i)
        w.push_back(q_row2[static_cast<std::size_t>(i)] ? 'u' : 'd');
    return DyckPath::parse(w);
}

Permutation knu_inverse(const DyckPath& path) {
    const int n = path.semilength();
    std::vector<int> p1, p2, q1, q2;
    for (int i = 1; i <= n; ++i)
        (path.up_at(i) ? p1 : p2).push_back(i);
    for (int i = 1; i <= n; ++i)
        (path.up_at(2 * n + 1 - i) ? q2 : q1).push_back(i);
    return inverse_rsk(TwoRowTableau(std::move(p1), std::move(p2)),
                       TwoRowTableau(std::move(q1), std::move(q2)));
}

DyckPath krar(const Permutation& sigma) {
    require_avoids_132(sigma, "krar");
    const int n = sigma.size();
    const Permutation inv = sigma.inverse();
    // lambda[i] = #{j < sigma(i) : sigma^-1(j) > i}, weakly decreasing with
    // lambda[i] <= n - i for 132-avoiders; lambda[0] = n by convention
    std::vector<int> lambda(static_cast<std::size_t>(n) + 1, 0);
    lambda[0] = n;
    for (int i = 1; i <= n; ++i) {
        int c = 0;
        for (int j = 1; j < sigma(i); ++j)
            c += inv(j) > i;
        lambda[static_cast<std::size_t>(i)] = c;
    }
    std::string w;
    w.reserve(static_cast<std::size_t>(2 * n));
    for (int i = n; i >= 1; --i) {
        w.push_back('u');
        w.append(static_cast<std::size_t>(lambda[static_cast<std::size_t>(i) - 1] -
                                          lambda[static_cast<std::size_t>(i)]),
                 'd');
    }
    return DyckPath::parse(w);
}

Permutation krar_inverse(const DyckPath& path) {
    const int n = path.semilength();
    // invert the emission rule: the run of d's after the k-th up-step has
    // length lambda[n-k] - lambda[n-k+1], and lambda[n] = 0
    std::vector<int> down_run(static_cast<std::size_t>(n), 0);
    int ups = 0;
    for (int k = 1; k <= path.length(); ++k) {
        if (path.up_at(k))
            ++ups;
        else
            ++down_run[static_cast<std::size_t>(ups) - 1];
    }
    std::vector<int> lambda(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k < n; ++k)
        lambda[static_cast<std::size_t>(n - k)] =
            lambda[static_cast<std::size_t>(n - k + 1)] + down_run[static_cast<std::size_t>(k) - 1];
    // greedy refill: the smallest unused value clearing the staircase row
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int j = lambda[static_cast<std::size_t>(i)] + 1;
        while (used[static_cast<std::size_t>(j)])
            ++j;
        used[static_cast<std::size_t>(j)] = 1;
        out[static_cast<std::size_t>(i) - 1] = j;
    }
    return Permutation(std::move(out));
}

Permutation theta(const Permutation& sigma) {
    return krar_inverse(knu(sigma));
}

Permutation theta_inverse(const Permutation& sigma) {
    return knu_inverse(krar(sigma));
}

Matching match_crosses(const Permutation& sigma) {
    require_avoids_321(sigma, "match_crosses");
    const int n = sigma.size();
    std::vector<int> exc, anti; // positions
    for (int i = 1; i <= n; ++i) {
        if (sigma(i) > i)
            exc.push_back(i);
        else if (sigma(i) < i)
            anti.push_back(i);
    }
    auto by_value = [&](int a, int b) { return sigma(a) < sigma(b); };
    std::sort(exc.begin(), exc.end(), by_value);
    std::sort(anti.begin(), anti.end(), by_value);

    Matching m;
    std::size_t a = 0, b = 0;
    while (a < exc.size() && b < anti.size()) {
        if (exc[a] > anti[b]) {
            m.unmatched_antiexc.push_back(anti[b]);
            ++b;
        } else if (sigma(exc[a]) < sigma(anti[b])) {
            m.unmatched_exc.push_back(exc[a]);
            ++a;
        } else {
            m.pairs.emplace_back(exc[a], anti[b]);
            ++a;
            ++b;
        }
    }
    for (; a < exc.size(); ++a)
        m.unmatched_exc.push_back(exc[a]);
    for (; b < anti.size(); ++b)
        m.unmatched_antiexc.push_back(anti[b]);
    return m;
}

DyckPath path_from_matching(const Permutation& sigma) {
    require_avoids_321(sigma, "path_from_matching");
    if (fixed_points(sigma) > 0)
        throw std::invalid_argument(
            "has-fixed-points: path_from_matching requires a fixed-point-free permutation");
    const Matching m = match_crosses(sigma);
    const int n = sigma.size();
    std::vector<char> matched_exc(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> matched_anti(static_cast<std::size_t>(n) + 1, 0);
    for (auto [e, a] : m.pairs) {
        matched_exc[static_cast<std::size_t>(e)] = 1;
        matched_anti[static_cast<std::size_t>(a)] = 1;
    }
    const Permutation inv = sigma.inverse();
    std::string w(static_cast<std::size_t>(2 * n), '?');
    // left half over columns j = 1..n: the cross in column j sits at row
    // sigma^-1(j)
    for (int j = 1; j <= n; ++j)
        w[static_cast<std::size_t>(j) - 1] =
            matched_exc[static_cast<std::size_t>(inv(j))] ? 'd' : 'u';
    // right half built right to left over rows i = 1..n
    for (int i = 1; i <= n; ++i)
        w[static_cast<std::size_t>(2 * n - i)] =
            matched_anti[static_cast<std::size_t>(i)] ? 'u' : 'd';
    return DyckPath::parse(w);
}

} // namespace pav
