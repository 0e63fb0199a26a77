#include "pav/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace pav {

namespace {

void check_strictly_increasing(const std::vector<int>& row, const char* which) {
    for (std::size_t j = 1; j < row.size(); ++j)
        if (row[j - 1] >= row[j])
            throw std::invalid_argument(std::string("non-standard-tableau: ") + which +
                                        " not strictly increasing");
}

} // namespace

TwoRowTableau::TwoRowTableau(std::vector<int> row1, std::vector<int> row2)
    : row1_(std::move(row1)), row2_(std::move(row2)) {
    if (row2_.size() > row1_.size())
        throw std::invalid_argument("non-standard-tableau: second row longer than first");
    check_strictly_increasing(row1_, "row 1");
    check_strictly_increasing(row2_, "row 2");
    for (std::size_t j = 0; j < row2_.size(); ++j)
        if (row2_[j] <= row1_[j])
            throw std::invalid_argument("non-standard-tableau: column " +
                                        std::to_string(j + 1) + " not strictly increasing");
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto* row : {&row1_, &row2_})
        for (int v : *row) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument(
                    "non-standard-tableau: entries are not exactly {1.." +
                    std::to_string(n) + "}");
            seen[static_cast<std::size_t>(v)] = 1;
        }
}

std::string TwoRowTableau::render() const {
    std::string out;
    for (std::size_t j = 0; j < row1_.size(); ++j) {
        if (j)
            out += ' ';
        out += std::to_string(row1_[j]);
    }
    out += '\n';
    for (std::size_t j = 0; j < row2_.size(); ++j) {
        if (j)
            out += ' ';
        out += std::to_string(row2_[j]);
    }
    return out;
}

std::pair<TwoRowTableau, TwoRowTableau> rsk(const Permutation& sigma) {
    std::vector<int> p1, p2, q1, q2;
    for (int i = 1; i <= sigma.size(); ++i) {
        const int v = sigma(i);
        auto it = std::lower_bound(p1.begin(), p1.end(), v);
        if (it == p1.end()) {
            p1.push_back(v);
            q1.push_back(i);
        } else {
            const int bumped = *it;
            *it = v;
            // a bumped entry below the end of row 2 would bump again, i.e.
            // open a third row; happens iff sigma contains 321
            if (!p2.empty() && bumped < p2.back())
                throw std::invalid_argument(
                    "not-321-avoiding: insertion at position " + std::to_string(i) +
                    " needs a third row");
            p2.push_back(bumped);
            q2.push_back(i);
        }
    }
    return {TwoRowTableau(std::move(p1), std::move(p2)),
            TwoRowTableau(std::move(q1), std::move(q2))};
}

Permutation inverse_rsk(const TwoRowTableau& p, const TwoRowTableau& q) {
    if (p.shape() != q.shape()) {
        auto [a, b] = p.shape();
        auto [c, d] = q.shape();
        throw std::invalid_argument("shape-mismatch: P is (" + std::to_string(a) + "," +
                                    std::to_string(b) + "), Q is (" + std::to_string(c) +
                                    "," + std::to_string(d) + ")");
    }
    const int n = p.size();
    std::vector<int> r1 = p.row1();
    std::vector<int> r2 = p.row2();
    std::vector<char> q_row2(static_cast<std::size_t>(n) + 1, 0);
    for (int v : q.row2())
        q_row2[static_cast<std::size_t>(v)] = 1;
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        if (q_row2[static_cast<std::size_t>(i)]) {
            const int carried = r2.back();
            r2.pop_back();
            // rightmost row-1 entry smaller than the carried one; exists by
            // column strictness
            auto it = std::lower_bound(r1.begin(), r1.end(), carried);
            out[static_cast<std::size_t>(i) - 1] = *(it - 1);
            *(it - 1) = carried;
        } else {
            out[static_cast<std::size_t>(i) - 1] = r1.back();
            r1.pop_back();
        }
    }
    return Permutation(std::move(out));
}

} // namespace pav
