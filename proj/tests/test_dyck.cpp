#include "pav/dyck.hpp"

#include "test_oracles.hpp"

#include <doctest.h>

#include <set>
#include <string>
#include <vector>

using namespace pav;
using testutil::message_contains;
using testutil::thrown_message;

namespace {

constexpr std::uint64_t kCatalan[] = {1,   1,   2,    5,    14,   42,
                                      132, 429, 1430, 4862, 16796};

// Independent classification straight from the definition.
TunnelClass classify(const Tunnel& t, int n) {
    const int m = (t.start_x + t.end_x) / 2;
    if (m == n)
        return TunnelClass::centered;
    const bool across = t.start_x < n && n < t.end_x;
    if (m < n)
        return across ? TunnelClass::left_across : TunnelClass::left_side;
    return across ? TunnelClass::right_across : TunnelClass::right_side;
}

} // namespace

TEST_SUITE("dyck") {

TEST_CASE("parse accepts mixed case and whitespace") {
    CHECK(DyckPath::parse("uUdD").word() == "uudd");
    CHECK(DyckPath::parse(" u d \n u\td ").word() == "udud");
    CHECK(DyckPath::parse("").empty());
    CHECK(DyckPath::parse("  ").semilength() == 0);
    const DyckPath p = DyckPath::parse("uduudd");
    CHECK(p.semilength() == 3);
    CHECK(p.length() == 6);
    CHECK(p.up_at(1));
    CHECK_FALSE(p.up_at(2));
    CHECK(DyckPath::parse(p.word()) == p);
}

TEST_CASE("parse rejects malformed words") {
    CHECK(message_contains(thrown_message([] { DyckPath::parse("uxd"); }),
                           "bad-character 'x' at position 2"));
    CHECK(message_contains(thrown_message([] { DyckPath::parse("ud!"); }),
                           "bad-character '!' at position 3"));
    CHECK(message_contains(thrown_message([] { DyckPath::parse("ud d u"); }),
                           "negative-prefix at x=3"));
    CHECK(message_contains(thrown_message([] { DyckPath::parse("duud"); }),
                           "negative-prefix at x=1"));
    CHECK(message_contains(thrown_message([] { DyckPath::parse("uu"); }),
                           "unbalanced: final height 2"));
    CHECK(message_contains(thrown_message([] { DyckPath::parse("uudud"); }),
                           "unbalanced: final height 1"));
}

TEST_CASE("height profile and center height") {
    const DyckPath p = DyckPath::parse("uduuduududduuddd");
    const std::vector<int> profile = {0, 1, 0, 1, 2, 1, 2, 3, 2,
                                      3, 2, 1, 2, 3, 2, 1, 0};
    for (int x = 0; x <= p.length(); ++x)
        CHECK(height_at(p, x) == profile[static_cast<std::size_t>(x)]);
    CHECK(he(p) == 2);
    CHECK(he(DyckPath{}) == 0);
    CHECK(he(DyckPath::parse("uudd")) == 2);
    CHECK(he(DyckPath::parse("udud")) == 0);
    CHECK(message_contains(thrown_message([&] { height_at(p, -1); }), "x=-1"));
    CHECK(message_contains(thrown_message([&] { height_at(p, 17); }), "x=17"));
}

TEST_CASE("he_c samples the profile around the center") {
    const DyckPath p = DyckPath::parse("uduuduududduuddd");
    const int n = p.semilength();
    for (int c = -(n - 1); c <= n - 1; ++c)
        CHECK(he_c(p, c) == height_at(p, n - c));
    CHECK(he_c(p, 0) == he(p));
    CHECK(message_contains(thrown_message([&] { he_c(p, 8); }),
                           "offset 8 out of range for semilength 8"));
    CHECK(message_contains(thrown_message([&] { he_c(p, -8); }),
                           "offset -8 out of range"));
    CHECK(message_contains(thrown_message([] { he_c(DyckPath{}, 0); }),
                           "offset 0 out of range for semilength 0"));
}

TEST_CASE("tunnel list for a worked example") {
    const DyckPath p = DyckPath::parse("uduuduududduuddd");
    const std::vector<Tunnel> expected = {
        {0, 2, 0, TunnelClass::left_side},   {2, 16, 0, TunnelClass::right_across},
        {3, 5, 1, TunnelClass::left_side},   {5, 11, 1, TunnelClass::centered},
        {6, 8, 2, TunnelClass::left_side},   {8, 10, 2, TunnelClass::right_side},
        {11, 15, 1, TunnelClass::right_side}, {12, 14, 2, TunnelClass::right_side},
    };
    CHECK(tunnels(p) == expected);

    const TunnelCounts c = tunnel_counts(p);
    CHECK(c.centered == 1);
    CHECK(c.right_side == 3);
    CHECK(c.right_across == 1);
    CHECK(c.left_side == 3);
    CHECK(c.left_across == 0);
    CHECK(c.ct() == 1);
    CHECK(c.rt() == 4);
    CHECK(c.lt() == 3);
    CHECK(ct(p) == 1);
    CHECK(rt(p) == 4);
    CHECK(lt(p) == 3);
    CHECK(right_side(p) == 3);
    CHECK(right_across(p) == 1);
    CHECK(left_side(p) == 3);
    CHECK(left_across(p) == 0);
}

TEST_CASE("tunnel class names") {
    CHECK(to_string(TunnelClass::left_side) == "left-side");
    CHECK(to_string(TunnelClass::left_across) == "left-across");
    CHECK(to_string(TunnelClass::centered) == "centered");
    CHECK(to_string(TunnelClass::right_across) == "right-across");
    CHECK(to_string(TunnelClass::right_side) == "right-side");
}

TEST_CASE("small tunnel inventories") {
    CHECK(tunnels(DyckPath{}).empty());
    const auto pyr = tunnels(DyckPath::parse("uudd"));
    REQUIRE(pyr.size() == 2);
    CHECK(pyr[0] == Tunnel{0, 4, 0, TunnelClass::centered});
    CHECK(pyr[1] == Tunnel{1, 3, 1, TunnelClass::centered});
    const DyckPath saw = DyckPath::parse("udud");
    CHECK(ct(saw) == 0);
    CHECK(lt(saw) == 1);
    CHECK(rt(saw) == 1);
}

TEST_CASE("tunnel structure holds on every path") {
    for (int n = 0; n <= 10; ++n) {
        enumerate_paths(n, [&](const DyckPath& p) {
            const auto ts = tunnels(p);
            REQUIRE(static_cast<int>(ts.size()) == n);
            TunnelCounts tally;
            for (const Tunnel& t : ts) {
                REQUIRE(0 <= t.start_x);
                REQUIRE(t.end_x <= 2 * n);
                REQUIRE((t.end_x - t.start_x) % 2 == 0);
                REQUIRE(t.end_x > t.start_x);
                REQUIRE(p.up_at(t.start_x + 1));
                REQUIRE_FALSE(p.up_at(t.end_x));
                REQUIRE(height_at(p, t.start_x) == t.height);
                REQUIRE(height_at(p, t.end_x) == t.height);
                for (int x = t.start_x + 1; x < t.end_x; ++x)
                    REQUIRE(height_at(p, x) > t.height);
                REQUIRE(t.cls == classify(t, n));
                switch (t.cls) {
                case TunnelClass::centered: ++tally.centered; break;
                case TunnelClass::right_side: ++tally.right_side; break;
                case TunnelClass::right_across: ++tally.right_across; break;
                case TunnelClass::left_side: ++tally.left_side; break;
                case TunnelClass::left_across: ++tally.left_across; break;
                }
            }
            REQUIRE(tunnel_counts(p) == tally);
            REQUIRE(ct(p) + rt(p) + lt(p) == n);
            REQUIRE((n - he(p)) % 2 == 0);
        });
    }
}

TEST_CASE("reflection examples") {
    CHECK(reflect(DyckPath::parse("uuddud")) == DyckPath::parse("uduudd"));
    CHECK(reflect(DyckPath{}) == DyckPath{});
    CHECK(reflect(DyckPath::parse("uudd")) == DyckPath::parse("uudd"));
    const DyckPath q = reflect(DyckPath::parse("uduuduududduuddd"));
    CHECK(q.word() == "uuudduududduddud");
    CHECK(ct(q) == 1);
    CHECK(rt(q) == 3);
    CHECK(lt(q) == 4);
}

TEST_CASE("reflection is an involution that swaps sides") {
    for (int n = 0; n <= 7; ++n) {
        enumerate_paths(n, [&](const DyckPath& p) {
            const DyckPath q = reflect(p);
            REQUIRE(q.semilength() == n);
            REQUIRE(reflect(q) == p);
            const TunnelCounts a = tunnel_counts(p);
            const TunnelCounts b = tunnel_counts(q);
            REQUIRE(b.centered == a.centered);
            REQUIRE(b.right_side == a.left_side);
            REQUIRE(b.left_side == a.right_side);
            REQUIRE(b.right_across == a.left_across);
            REQUIRE(b.left_across == a.right_across);
            REQUIRE(he(q) == he(p));
        });
    }
}

TEST_CASE("path enumeration is complete, valid and lexicographic") {
    for (int n = 0; n <= 10; ++n) {
        std::uint64_t count = 0;
        std::string prev;
        bool first = true;
        std::set<std::string> seen;
        enumerate_paths(n, [&](const DyckPath& p) {
            ++count;
            REQUIRE(p.semilength() == n);
            REQUIRE(DyckPath::parse(p.word()) == p);
            if (!first)
                REQUIRE(prev < p.word());
            prev = p.word();
            first = false;
            seen.insert(p.word());
        });
        CHECK(count == kCatalan[n]);
        CHECK(seen.size() == count);
    }
    const auto three = list_paths(3);
    REQUIRE(three.size() == 5);
    CHECK(three.front().word() == "ududud");
    CHECK(three.back().word() == "uuuddd");
    CHECK(list_paths(0).size() == 1);
    CHECK(list_paths(0).front().empty());
}

} // TEST_SUITE
