#include <numeric>
#include <random>

#include "doctest.h"
#include "grundy/closed_form.hpp"

using namespace grundy;

TEST_CASE("g bound") {
    CHECK(g_bound({2, 3, 0, 1, 1}) == 16);
    CHECK(g_bound({3, 1, 2, 1, 4}) == 2);
    CHECK(g_bound({5, 5, 4, 7, 3}) == 120);
    // y1 = y2 = 0 degenerates to x1 + x2.
    CHECK(g_bound({4, 3, 0, 5, 0}) == 8);
}

TEST_CASE("g scales with dilation") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> small(1, 6), y(0, 9), mul(2, 4);
    for (int i = 0; i < 50; ++i) {
        LengyelParams p{small(rng), small(rng), y(rng), small(rng), y(rng)};
        const int m = mul(rng), n = mul(rng);
        LengyelParams scaled{n * p.b, m * p.x1, n * p.y1, m * p.x2, n * p.y2};
        CHECK(g_bound(scaled) == m * g_bound(p));
    }
}

TEST_CASE("two-move period formula") {
    CHECK(two_move_period(2, 1, 1) == std::pair{4, 4});
    CHECK(two_move_period(3, 1, 1) == std::pair{3, 6});
    CHECK(two_move_period(2, 5, 2) == std::pair{1, 4});
    CHECK(two_move_period(1, 1, 0) == std::pair{2, 2});
}

TEST_CASE("unit-transfer period theorem") {
    CHECK(theorem1_period(1, 1) == std::pair{2, 2});
    CHECK(theorem1_period(2, 3) == std::pair{16, 4});
    CHECK(theorem1_period(2, 2) == std::pair{4, 4});
    CHECK(theorem1_period(3, 1) == std::pair{12, 6});
    CHECK(theorem1_period(2, 6) == std::pair{4, 4});
    CHECK(theorem1_period(4, 6) == std::pair{56, 8});
}

TEST_CASE("zero-cell formula") {
    CHECK(p_position_formula(2, 0, 0));
    CHECK_FALSE(p_position_formula(2, 1, 0));
    CHECK_THROWS_AS(p_position_formula(3, 0, 0), std::invalid_argument);
}

TEST_CASE("dilation reduction") {
    auto r = dilation_reduce({2, 2, 0, 4, 2});
    CHECK(r.m == 2);
    CHECK(r.n == 2);
    CHECK(r.reduced == LengyelParams{1, 1, 0, 2, 1});

    auto r2 = dilation_reduce({3, 5, 0, 7, 2});
    CHECK(r2.m == 1);
    CHECK(r2.n == 1);
    CHECK(r2.reduced == LengyelParams{3, 5, 0, 7, 2});

    // A zero y is ignored by the vertical gcd.
    auto r3 = dilation_reduce({3, 5, 0, 7, 3});
    CHECK(r3.m == 1);
    CHECK(r3.n == 3);
    CHECK(r3.reduced == LengyelParams{1, 5, 0, 7, 1});
}

TEST_CASE("redundant transfer elimination") {
    auto a = vector_elimination({2, 1, 0, 2, 2});
    REQUIRE(a.has_value());
    CHECK(a->x1 == 1);
    CHECK(a->y1 == 0);

    auto b = vector_elimination({2, 2, 0, 1, 1});
    REQUIRE(b.has_value());
    CHECK(b->x1 == 1);
    CHECK(b->y1 == 1);

    CHECK_FALSE(vector_elimination({2, 3, 0, 1, 1}).has_value());
    // Duplicate transfer: k = 1 with matching y's.
    auto d = vector_elimination({3, 2, 1, 2, 1});
    REQUIRE(d.has_value());
    CHECK(d->x1 == 2);
    CHECK(d->y1 == 1);
}

TEST_CASE("sporadic families") {
    auto a = sporadic_lookup({8, 1, 0, 1, 7});
    REQUIRE(a.has_value());
    CHECK(a->preperiod == 6);
    CHECK(a->period == 32);

    auto b = sporadic_lookup({3, 3, 0, 2, 5});
    REQUIRE(b.has_value());
    CHECK(b->preperiod == 5);
    CHECK(b->period == 6);

    auto c = sporadic_lookup({3, 1, 2, 1, 4});
    REQUIRE(c.has_value());
    CHECK(c->preperiod == 0);
    CHECK(c->period == 2);

    auto d = sporadic_lookup({7, 1, 0, 1, 6});
    REQUIRE(d.has_value());
    CHECK(d->preperiod == 6);
    CHECK(d->period == 2);

    auto e = sporadic_lookup({1, 7, 0, 6, 1});
    REQUIRE(e.has_value());
    CHECK_FALSE(e->preperiod.has_value());
    CHECK(e->period == 2);

    CHECK_FALSE(sporadic_lookup({2, 3, 0, 1, 1}).has_value());
}

TEST_CASE("prediction dispatch") {
    auto a = predict({2, 3, 0, 1, 1});
    CHECK(a.kind == PredictionKind::ExactPeriod);
    CHECK(a.horizontal_period == 16);
    CHECK(a.vertical_period == 4);
    CHECK(a.preperiod == 0);
    CHECK(a.provenance == "unit-transfer-theorem");

    auto b = predict({3, 5, 0, 7, 2});
    CHECK(b.kind == PredictionKind::ExactPeriod);
    CHECK(b.horizontal_period == 36);
    CHECK(b.provenance == "conjectured-g-period");
    CHECK_FALSE(b.preperiod.has_value());

    auto c = predict({5, 5, 4, 7, 3});
    CHECK(c.kind == PredictionKind::DivisorBound);
    CHECK(c.divisor_bound == 120);

    // The one-pile reduction keeps the minimal period even when one width is
    // an odd multiple of the other.
    auto d = predict({4, 1, 0, 3, 0});
    CHECK(d.kind == PredictionKind::ExactPeriod);
    CHECK(d.horizontal_period == 2);
    CHECK(d.preperiod == 0);

    auto e = predict({4, 2, 0, 3, 0});
    CHECK(e.horizontal_period == 5);

    // Dilation lift: reduced game is eliminated to a two-move one.
    auto f = predict({2, 2, 0, 4, 2});
    CHECK(f.kind == PredictionKind::ExactPeriod);
    CHECK(f.horizontal_period == 4);
    CHECK(f.vertical_period == 4);

    auto g = predict({1, 1, 0, 1, 1});
    CHECK(g.horizontal_period == 2);
    CHECK(g.vertical_period == 2);

    // y's reduce mod 2b before anything else.
    auto h = predict({2, 3, 4, 1, 5});
    CHECK(h.provenance == predict({2, 3, 0, 1, 1}).provenance);
    CHECK(h.horizontal_period == 16);

    // Both transfers climbing exactly b collapse every column to the vertical
    // pattern: period 1, not x1+x2.
    auto i = predict({1, 2, 1, 3, 1});
    CHECK(i.horizontal_period == 1);
    CHECK(i.preperiod == 0);
    auto j = predict({3, 2, 3, 5, 3});
    CHECK(j.horizontal_period == 1);
    // ...while the general combined-climb-2b family keeps x1+x2.
    auto k = predict({2, 2, 1, 3, 3});
    CHECK(k.horizontal_period == 5);
    CHECK(k.preperiod == 0);
}

TEST_CASE("multitransfer period") {
    CHECK(multitransfer_period(6) == 8);
    CHECK(multitransfer_period(7) == 9);
    CHECK(multitransfer_period(2) == 4);
    CHECK_THROWS_AS(multitransfer_period(1), std::invalid_argument);
}
