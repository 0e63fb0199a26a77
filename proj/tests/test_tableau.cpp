#include "pav/tableau.hpp"

#include "pav/perm.hpp"
#include "test_oracles.hpp"

#include <doctest.h>

#include <utility>
#include <vector>

using namespace pav;
using testutil::all_permutations;
using testutil::brute_contains;
using testutil::message_contains;
using testutil::perm;
using testutil::thrown_message;

TEST_SUITE("tableau") {

TEST_CASE("constructor validates standardness") {
    CHECK_NOTHROW(TwoRowTableau({1, 3, 4, 6, 7}, {2, 5, 8}));
    CHECK_NOTHROW(TwoRowTableau({}, {}));
    CHECK_NOTHROW(TwoRowTableau({1}, {}));
    CHECK(message_contains(thrown_message([] { TwoRowTableau({1}, {2, 3}); }),
                           "second row longer than first"));
    CHECK(message_contains(thrown_message([] { TwoRowTableau({2, 1}, {}); }),
                           "row 1 not strictly increasing"));
    CHECK(message_contains(thrown_message([] { TwoRowTableau({1, 2, 4}, {3, 3}); }),
                           "row 2 not strictly increasing"));
    CHECK(message_contains(thrown_message([] { TwoRowTableau({1, 4}, {2, 3}); }),
                           "column 2 not strictly increasing"));
    CHECK(message_contains(thrown_message([] { TwoRowTableau({2, 3}, {1, 4}); }),
                           "column 1 not strictly increasing"));
    CHECK(message_contains(thrown_message([] { TwoRowTableau({1, 2}, {2, 3}); }),
                           "entries are not exactly {1..4}"));
    CHECK(message_contains(thrown_message([] { TwoRowTableau({1, 5}, {}); }),
                           "entries are not exactly {1..2}"));
}

TEST_CASE("accessors and rendering") {
    const TwoRowTableau t({1, 3, 4, 6, 7}, {2, 5, 8});
    CHECK(t.size() == 8);
    CHECK(t.shape() == std::pair<int, int>(5, 3));
    CHECK(t.row1() == std::vector<int>{1, 3, 4, 6, 7});
    CHECK(t.row2() == std::vector<int>{2, 5, 8});
    CHECK(t.render() == "1 3 4 6 7\n2 5 8");
    CHECK(TwoRowTableau({}, {}).render() == "\n");
    CHECK(t == TwoRowTableau({1, 3, 4, 6, 7}, {2, 5, 8}));
    CHECK_FALSE(t == TwoRowTableau({1, 2, 3, 4, 5, 6, 7, 8}, {}));
}

TEST_CASE("insertion pair for a worked example") {
    const auto [p, q] = rsk(perm({2, 3, 5, 1, 4, 6, 8, 7}));
    CHECK(p.row1() == std::vector<int>{1, 3, 4, 6, 7});
    CHECK(p.row2() == std::vector<int>{2, 5, 8});
    CHECK(q.row1() == std::vector<int>{1, 2, 3, 6, 7});
    CHECK(q.row2() == std::vector<int>{4, 5, 8});
}

TEST_CASE("insertion of extreme permutations") {
    const auto [ip, iq] = rsk(Permutation::identity(4));
    CHECK(ip.row1() == std::vector<int>{1, 2, 3, 4});
    CHECK(ip.row2().empty());
    CHECK(iq.row1() == std::vector<int>{1, 2, 3, 4});
    const auto [ep, eq] = rsk(Permutation{});
    CHECK(ep.size() == 0);
    CHECK(eq.size() == 0);
    const auto [tp, tq] = rsk(perm({2, 1}));
    CHECK(tp.row1() == std::vector<int>{1});
    CHECK(tp.row2() == std::vector<int>{2});
    CHECK(tq.row1() == std::vector<int>{1});
    CHECK(tq.row2() == std::vector<int>{2});
}

TEST_CASE("a third row is needed exactly on 321-containment") {
    CHECK(message_contains(thrown_message([] { rsk(perm({3, 2, 1})); }),
                           "not-321-avoiding: insertion at position 3"));
    const Pattern p321 = perm({3, 2, 1});
    for (int n = 0; n <= 6; ++n)
        all_permutations(n, [&](const Permutation& s) {
            const bool threw = !thrown_message([&] { rsk(s); }).empty();
            REQUIRE(threw == brute_contains(s, p321));
        });
}

TEST_CASE("insertion followed by extraction is the identity") {
    const Pattern p321 = perm({3, 2, 1});
    for (int n = 0; n <= 9; ++n)
        enumerate_avoiding(n, p321, {}, [](const Permutation& s) {
            const auto [p, q] = rsk(s);
            REQUIRE(inverse_rsk(p, q) == s);
        });
}

TEST_CASE("extraction validates shapes") {
    const TwoRowTableau a({1, 3}, {2});
    const TwoRowTableau b({1, 2, 3}, {});
    CHECK(message_contains(thrown_message([&] { inverse_rsk(a, b); }),
                           "shape-mismatch: P is (2,1), Q is (3,0)"));
    CHECK_NOTHROW(inverse_rsk(a, a));
}

TEST_CASE("swapping the pair inverts the permutation") {
    const Pattern p321 = perm({3, 2, 1});
    for (int n = 0; n <= 8; ++n)
        enumerate_avoiding(n, p321, {}, [](const Permutation& s) {
            const auto [p, q] = rsk(s);
            const auto [pi, qi] = rsk(s.inverse());
            REQUIRE(pi == q);
            REQUIRE(qi == p);
            REQUIRE(inverse_rsk(q, p) == s.inverse());
        });
}

TEST_CASE("first row length equals the longest increasing subsequence") {
    const Pattern p321 = perm({3, 2, 1});
    for (int n = 0; n <= 8; ++n)
        enumerate_avoiding(n, p321, {}, [](const Permutation& s) {
            const auto [p, q] = rsk(s);
            REQUIRE(static_cast<int>(p.row1().size()) == lis(s));
            REQUIRE(p.shape() == q.shape());
        });
}

} // TEST_SUITE
