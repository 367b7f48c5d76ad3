#include <algorithm>

#include "doctest.h"
#include "grundy/periodicity.hpp"

using namespace grundy;

namespace {

SgTable lengyel_table(const LengyelParams& p, int w, int h) {
    return compute_sg_table(build_lengyel(p), {w, h});
}

}  // namespace

TEST_CASE("nim-periodicity holds for transfer games") {
    CHECK(check_nim_periodicity(lengyel_table({2, 3, 0, 1, 1}, 40, 16), 2).holds);
    CHECK(check_nim_periodicity(lengyel_table({1, 1, 0, 1, 1}, 12, 12), 1).holds);
    CHECK(check_nim_periodicity(compute_sg_table(build_multitransfer(4, 4, 4), {24, 16}), 4).holds);
}

TEST_CASE("nim-periodicity fails for a mixed-sign game") {
    auto t = compute_sg_table(make_rules(2, {{0, -2}, {-1, 0}, {-3, -2}, {-2, 2}}), {10, 10});
    auto r = check_nim_periodicity(t, 2);
    CHECK_FALSE(r.holds);
    REQUIRE(r.counterexample.has_value());
    CHECK(*r.counterexample == std::pair{3, 0});
}

TEST_CASE("nim-periodicity window precondition") {
    auto t = lengyel_table({5, 1, 0, 1, 1}, 8, 4);
    CHECK_THROWS_AS(check_nim_periodicity(t, 5), std::invalid_argument);
}

TEST_CASE("value-flipping move indices") {
    auto r = make_rules(3, {{-3, 0, 5}, {-2, 1, 0}, {-1, 1, 1}, {0, -3, 0}, {0, 0, -4}});
    auto idx = nim_periodic_move_indices(r);
    REQUIRE(idx.size() == 2);
    CHECK(r.moves[idx[0]] == Move{0, -3, 0});
    CHECK(r.moves[idx[1]] == Move{0, 0, -4});

    auto lengyel = build_lengyel({2, 3, 0, 1, 1});
    auto li = nim_periodic_move_indices(lengyel);
    REQUIRE(li.size() == 1);
    CHECK(lengyel.moves[li[0]] == Move{0, -2});

    CHECK(nim_periodic_move_indices(make_rules(2, {{-1, -1}, {-2, 0}})).empty());
}

TEST_CASE("max value bound") {
    CHECK(max_value_bound(make_rules(3, {{-3, 0, 5}, {-2, 1, 0}, {-1, 1, 1}, {0, -3, 0}, {0, 0, -4}})) == 3);
    CHECK(max_value_bound(build_two_move(4, 2, 3)) == 1);
    CHECK(max_value_bound(make_rules(2, {{-1, -1}, {-2, 0}, {-3, 1}})) == 3);
    CHECK(max_value_bound(build_lengyel({2, 3, 0, 1, 1})) == 3);
}

TEST_CASE("period detection on the classic instances") {
    auto r = detect_horizontal_period(lengyel_table({2, 3, 0, 1, 1}, 64, 8), 2);
    CHECK(r.certified);
    CHECK(r.preperiod == 0);
    CHECK(r.horizontal_period == 16);
    CHECK(r.vertical_period == 4);

    auto r2 = detect_horizontal_period(lengyel_table({7, 1, 0, 1, 6}, 64, 28), 7);
    CHECK(r2.preperiod == 6);
    CHECK(r2.horizontal_period == 2);
    CHECK(r2.vertical_period == 14);

    auto r3 = detect_horizontal_period(lengyel_table({2, 2, 0, 3, 1}, 64, 8), 2);
    CHECK(r3.preperiod == 10);
    CHECK(r3.horizontal_period == 4);

    auto r4 = detect_horizontal_period(lengyel_table({1, 1, 0, 1, 1}, 64, 4), 1);
    CHECK(r4.preperiod == 0);
    CHECK(r4.horizontal_period == 2);
    CHECK(r4.vertical_period == 2);
}

TEST_CASE("period detection certifies the extra-transfer game") {
    auto rules = make_rules(2, {{0, -3}, {-2, 0}, {-1, 3}, {-2, 2}, {-4, 1}});
    auto t = compute_sg_table(rules, {80, 12});
    auto r = detect_horizontal_period(t, 3);
    CHECK(r.certified);
    CHECK(r.preperiod == 14);
    CHECK(r.horizontal_period == 15);
    CHECK(r.state_width == 4);
}

TEST_CASE("period detection needs nim-periodicity") {
    auto t = compute_sg_table(make_rules(2, {{0, -2}, {-1, 0}, {-3, -2}, {-2, 2}}), {24, 12});
    CHECK_THROWS_AS(detect_horizontal_period(t, 2), detection_error);
}

TEST_CASE("period detection reports a too-narrow window") {
    CHECK_THROWS_AS(detect_horizontal_period(lengyel_table({2, 3, 0, 1, 1}, 18, 8), 2),
                    detection_error);
}

TEST_CASE("block certification") {
    CHECK(certify_period_block({1, 1, 0, 1, 1}, 2, 2));
    CHECK(certify_period_block({2, 3, 0, 1, 1}, 16, 4));
    CHECK_FALSE(certify_period_block({2, 3, 0, 1, 1}, 8, 4));
}

TEST_CASE("2-columns obey the block rule") {
    auto t = lengyel_table({2, 3, 0, 1, 1}, 64, 8);
    auto r = classify_2columns(t);
    CHECK(r.block_rule_holds);
    for (int c : r.two_columns) CHECK(c % 4 == 3);

    auto t2 = lengyel_table({3, 1, 0, 1, 1}, 48, 12);
    auto r2 = classify_2columns(t2);
    CHECK(r2.block_rule_holds);
    for (int c : r2.two_columns) CHECK(c % 2 == 1);

    // The first max(x1,x2) columns never hold a 2.
    auto t3 = lengyel_table({2, 4, 1, 3, 2}, 60, 8);
    for (int c : classify_2columns(t3).two_columns) CHECK(c >= 4);
}

TEST_CASE("row parity of 2s and 3s") {
    CHECK(check_row_parity(lengyel_table({2, 3, 0, 1, 1}, 64, 8), 2));
    CHECK(check_row_parity(lengyel_table({3, 1, 0, 1, 1}, 48, 12), 3));
    // A game without the vertical flip breaks the parity split.
    auto bad = compute_sg_table(make_rules(2, {{0, -2}, {-1, 0}, {-3, -2}, {-2, 2}}), {10, 10});
    CHECK_FALSE(check_row_parity(bad, 2));
}

TEST_CASE("bad pairs of the long-preperiod game") {
    auto t = lengyel_table({7, 1, 0, 1, 6}, 64, 28);
    auto r = find_bad_pairs(t, {7, 1, 0, 1, 6});
    // Window rows 0..13 carry 9 pairs; the taller window sees each of them
    // once more via the vertical repeat, and nothing right of column 6.
    CHECK(!r.pairs.empty());
    for (const auto& p : r.pairs) {
        CHECK(p.cell.first <= 6);
        CHECK(p.cell.second - p.partner.second == 6);
        CHECK(p.cell.first == p.partner.first);
    }
    int in_first_period = 0;
    for (const auto& p : r.pairs)
        if (p.cell.second < 14) ++in_first_period;
    CHECK(in_first_period == 9);
    CHECK(!r.chains.empty());
    for (const auto& c : r.chains) CHECK(c.length >= 2);
}

TEST_CASE("games without bad pairs") {
    auto t = lengyel_table({2, 3, 0, 1, 1}, 64, 8);
    CHECK(find_bad_pairs(t, {2, 3, 0, 1, 1}).pairs.empty());
    // One transfer at least twice as wide as the other leaves no room for them.
    auto t2 = lengyel_table({3, 4, 0, 2, 1}, 60, 12);
    CHECK(find_bad_pairs(t2, {3, 4, 0, 2, 1}).pairs.empty());
    auto t3 = lengyel_table({2, 5, 1, 2, 3}, 60, 8);
    CHECK(find_bad_pairs(t3, {2, 5, 1, 2, 3}).pairs.empty());
}

TEST_CASE("diagonal periodicity") {
    CHECK(check_diagonal_periodicity(lengyel_table({2, 3, 0, 1, 1}, 64, 8), {2, 3, 0, 1, 1}) == 0);
    CHECK_FALSE(check_diagonal_periodicity(lengyel_table({3, 1, 2, 1, 5}, 40, 18), {3, 1, 2, 1, 5})
                    .has_value());
    CHECK_FALSE(
        check_diagonal_periodicity(lengyel_table({1, 1, 0, 1, 1}, 32, 8), {1, 1, 0, 1, 1}).has_value());
    auto x0 = check_diagonal_periodicity(lengyel_table({7, 1, 0, 1, 6}, 64, 28), {7, 1, 0, 1, 6});
    REQUIRE(x0.has_value());
    CHECK(*x0 <= 7);
}

TEST_CASE("star monotonicity along the combined transfer") {
    for (const auto& p : {LengyelParams{2, 3, 0, 1, 1}, LengyelParams{7, 1, 0, 1, 6},
                          LengyelParams{3, 2, 1, 1, 4}, LengyelParams{2, 2, 0, 3, 1}}) {
        auto t = lengyel_table(p, 60, 4 * p.b + p.y1 + p.y2);
        const int dx = p.x1 + p.x2, dy = p.y1 + p.y2;
        for (int x = 0; x + dx < t.width(); ++x)
            for (int y = dy; y < t.height(); ++y)
                if (sg_star_value(t.value(x + dx, y - dy)) == 2)
                    CHECK(sg_star_value(t.value(x, y)) == 2);
    }
}

TEST_CASE("no bad pairs past x0 forces diagonal periodicity soon after") {
    for (const auto& p : {LengyelParams{7, 1, 0, 1, 6}, LengyelParams{2, 2, 0, 3, 1},
                          LengyelParams{3, 3, 0, 2, 5}, LengyelParams{2, 3, 0, 1, 1}}) {
        auto t = lengyel_table(p, 72, 4 * p.b + p.y1 + p.y2);
        auto bad = find_bad_pairs(t, p);
        int x0 = 0;
        for (const auto& pr : bad.pairs) x0 = std::max(x0, pr.cell.first + 1);
        auto diag = check_diagonal_periodicity(t, p);
        REQUIRE(diag.has_value());
        CHECK(*diag <= x0 + std::max(p.x1, p.x2));
    }
}

TEST_CASE("two-move tables flip along the transfer move") {
    for (auto [b, x1, y1] : {std::tuple{2, 1, 1}, {3, 2, 4}, {5, 3, 0}}) {
        auto t = compute_sg_table(build_two_move(b, x1, y1), {40, 24});
        for (int x = 0; x + x1 < 40; ++x)
            for (int y = y1; y < 24; ++y)
                CHECK(t.value(x, y) == (t.value(x + x1, y - y1) ^ 1));
    }
}

TEST_CASE("two-move vector subtraction games repeat in u+v") {
    auto t = compute_sg_table(make_rules(2, {{-1, -2}, {-3, -1}}), {30, 30});
    for (int x = 0; x + 4 < 30; ++x)
        for (int y = 0; y + 3 < 30; ++y) CHECK(t.value(x, y) == t.value(x + 4, y + 3));
}

TEST_CASE("combined climb of 2b gives diagonal periodicity from the left edge") {
    for (const auto& p : {LengyelParams{3, 1, 2, 1, 4}, LengyelParams{2, 2, 1, 3, 3},
                          LengyelParams{5, 5, 7, 4, 3}}) {
        REQUIRE(p.y1 + p.y2 == 2 * p.b);
        auto t = lengyel_table(p, 16 * (p.x1 + p.x2), 2 * p.b + p.y1 + p.y2 + 1);
        CHECK(check_diagonal_periodicity(t, p) == 0);
        auto r = detect_horizontal_period(t, p.b);
        CHECK(r.preperiod == 0);
        CHECK(r.horizontal_period == p.x1 + p.x2);
    }
}

TEST_CASE("bad pairs die out when neither exceptional shape applies") {
    // y1+y2 != 2b and the widths differ (or are unit with |dy| != b): every
    // bad pair sits left of a finite column well inside the window.
    for (const auto& p : {LengyelParams{8, 1, 0, 1, 7}, LengyelParams{2, 2, 0, 3, 1},
                          LengyelParams{3, 3, 0, 2, 5}, LengyelParams{5, 2, 3, 3, 6},
                          LengyelParams{4, 3, 1, 2, 5}}) {
        auto t = lengyel_table(p, 96, 4 * p.b + p.y1 + p.y2);
        int last = -1;
        for (const auto& pr : find_bad_pairs(t, p).pairs) last = std::max(last, pr.cell.first);
        CHECK(last < 48);
    }
}

TEST_CASE("reports are stable under window doubling") {
    for (const auto& p : {LengyelParams{2, 3, 0, 1, 1}, LengyelParams{7, 1, 0, 1, 6},
                          LengyelParams{2, 2, 0, 3, 1}}) {
        auto a = detect_horizontal_period(lengyel_table(p, 72, 4 * p.b), p.b);
        auto b = detect_horizontal_period(lengyel_table(p, 144, 8 * p.b), p.b);
        CHECK(a.preperiod == b.preperiod);
        CHECK(a.horizontal_period == b.horizontal_period);
        CHECK(a.vertical_period == b.vertical_period);
    }
}
