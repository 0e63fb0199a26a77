#pragma once

#include "pav/perm.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pav {

// Standard Young tableau with at most two left-justified rows: both rows
// strictly increase, |row1| >= |row2|, row2[j] > row1[j] columnwise, and the
// entries are exactly {1..n}. The empty tableau is legal.
class TwoRowTableau {
public:
    TwoRowTableau() = default;

    // Validates the invariants above; throws std::invalid_argument with a
    // "non-standard-tableau: ..." message on violation.
    TwoRowTableau(std::vector<int> row1, std::vector<int> row2);

    const std::vector<int>& row1() const { return row1_; }
    const std::vector<int>& row2() const { return row2_; }

    int size() const { return static_cast<int>(row1_.size() + row2_.size()); }
    std::pair<int, int> shape() const {
        return {static_cast<int>(row1_.size()), static_cast<int>(row2_.size())};
    }

    // Two lines, entries space-separated; the second line may be empty.
    std::string render() const;

    friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;

private:
    std::vector<int> row1_;
    std::vector<int> row2_;
};

// Row-insertion correspondence sigma -> (P, Q) restricted to two rows: each
// sigma(i) either appends to row 1 of P or bumps the leftmost larger entry of
// row 1 to the end of row 2; Q records in which row the new square appeared at
// step i. Throws "not-321-avoiding: ..." as soon as an insertion would need a
// third row, which happens exactly when sigma contains 321.
std::pair<TwoRowTableau, TwoRowTableau> rsk(const Permutation& sigma);

// Inverse of rsk: processes entries n down to 1 of Q, reverse-bumping through
// row 1 of P. Throws "shape-mismatch: ..." when P and Q have different shapes.
Permutation inverse_rsk(const TwoRowTableau& p, const TwoRowTableau& q);

} // namespace pav
