#include "grundy/closed_form.hpp"

#include <algorithm>
#include <numeric>

namespace grundy {

namespace {

// Transfers ordered so the y = 0 move (if any) comes first; rule conditions
// below are written against this ordering.
LengyelParams canonical(const LengyelParams& p) {
    LengyelParams c = p;
    if (std::pair{c.y1, c.x1} > std::pair{c.y2, c.x2}) {
        std::swap(c.x1, c.x2);
        std::swap(c.y1, c.y2);
    }
    return c;
}

// SG sequence of the one-pile game {take x1, take x2}; purely periodic with
// period x1+x2, so the minimal period is its least working divisor.
int one_pile_period(int x1, int x2) {
    const int span = x1 + x2;
    std::vector<int> sg(2 * span);
    for (int i = 0; i < 2 * span; ++i) {
        std::vector<int> opts;
        if (i >= x1) opts.push_back(sg[i - x1]);
        if (i >= x2) opts.push_back(sg[i - x2]);
        sg[i] = mex(opts);
    }
    for (int d = 1; d <= span; ++d) {
        if (span % d != 0) continue;
        bool ok = true;
        for (int i = 0; i + d < 2 * span && ok; ++i) ok = sg[i] == sg[i + d];
        if (ok) return d;
    }
    return span;
}

Prediction exact(int preperiod, int p, int q, std::string provenance) {
    Prediction r;
    r.kind = PredictionKind::ExactPeriod;
    r.preperiod = preperiod;
    r.horizontal_period = p;
    r.vertical_period = q;
    r.provenance = std::move(provenance);
    return r;
}

Prediction predict_reduced(const LengyelParams& in) {
    const LengyelParams p = canonical(in);
    const int b = p.b;

    // One-pile row game: no transfer raises the second pile.
    if (p.y1 == 0 && p.y2 == 0)
        return exact(0, one_pile_period(p.x1, p.x2), 2 * b, "one-pile-subtraction");

    if (auto two = vector_elimination(p)) {
        const auto [period, q] = two_move_period(two->b, two->x1, two->y1);
        Prediction r = exact(0, period, q, "redundant-transfer");
        r.reduced_to = build_two_move(two->b, two->x1, two->y1);
        return r;
    }

    if (p.y1 == 0 && p.x2 == 1 && p.y2 == 1) {
        const auto [period, q] = theorem1_period(b, p.x1);
        return exact(0, period, q, "unit-transfer-theorem");
    }

    if (auto hit = sporadic_lookup(p)) {
        Prediction r;
        r.kind = PredictionKind::Sporadic;
        r.preperiod = hit->preperiod;
        r.horizontal_period = hit->period;
        r.vertical_period = 2 * b;
        r.provenance = hit->provenance;
        return r;
    }

    const long long g = g_bound(p);
    if (p.y1 == 0) {
        // Conjectured exact once every special family above has passed on the
        // candidate: 0 < y2 < 2b and both gcd conditions hold post-reduction.
        Prediction r;
        r.kind = PredictionKind::ExactPeriod;
        r.horizontal_period = static_cast<int>(g);
        r.vertical_period = 2 * b;
        r.divisor_bound = g;
        r.provenance = "conjectured-g-period";
        return r;
    }
    Prediction r;
    r.kind = PredictionKind::DivisorBound;
    r.vertical_period = 2 * b;
    r.divisor_bound = g;
    r.provenance = "g-divisor-bound";
    return r;
}

}  // namespace

const char* to_string(PredictionKind k) {
    switch (k) {
        case PredictionKind::ExactPeriod: return "exact-period";
        case PredictionKind::DivisorBound: return "divisor-bound";
        case PredictionKind::Reduction: return "reduction";
        case PredictionKind::Sporadic: return "sporadic";
        case PredictionKind::NoPrediction: return "no-prediction";
    }
    return "unknown";
}

long long g_bound(const LengyelParams& p) {
    if (!p.valid()) throw std::invalid_argument("invalid transfer game parameters");
    const long long twob = 2LL * p.b;
    const long long d = std::gcd(twob, static_cast<long long>(p.y1) + p.y2);
    return twob * (p.x1 + p.x2) / d;
}

std::pair<int, int> two_move_period(int b, int x1, int y1) {
    if (b < 1 || x1 < 1 || y1 < 0) throw std::invalid_argument("need b >= 1, x1 >= 1, y1 >= 0");
    if (y1 % b == 0 && (y1 / b) % 2 == 1) return {1, 2 * b};
    const int p = static_cast<int>(2LL * b * x1 / std::gcd(2LL * b, static_cast<long long>(y1) + b));
    return {p, 2 * b};
}

std::pair<int, int> theorem1_period(int b, int x1) {
    if (b < 1 || x1 < 1) throw std::invalid_argument("need b >= 1 and x1 >= 1");
    if (b == 1 && x1 == 1) return {2, 2};
    if (b % 2 == 0 && x1 % b == 0 && (x1 / b) % 2 == 1) return {2 * b, 2 * b};
    return {2 * b * (x1 + 1), 2 * b};
}

bool p_position_formula(int b, int x, int y) {
    if (b < 2 || b % 2 != 0) throw std::invalid_argument("the zero-cell formula needs even b");
    if (x < 0 || y < 0) throw std::invalid_argument("coordinates must be nonnegative");
    return ((x + y) / b + x) % 2 == 0;
}

DilationReduction dilation_reduce(const LengyelParams& p) {
    if (!p.valid()) throw std::invalid_argument("invalid transfer game parameters");
    DilationReduction r;
    r.m = std::gcd(p.x1, p.x2);
    r.n = std::gcd(p.b, std::gcd(p.y1, p.y2));
    r.reduced = LengyelParams{p.b / r.n, p.x1 / r.m, p.y1 / r.n, p.x2 / r.m, p.y2 / r.n};
    return r;
}

std::optional<TwoMoveGame> vector_elimination(const LengyelParams& p) {
    const int twob = 2 * p.b;
    const auto reduced_mod = [twob](long long v) { return static_cast<int>(((v % twob) + twob) % twob); };
    const auto redundant = [&](int xa, int ya, int xb, int yb) {
        // Is (-xb, yb) redundant next to (-xa, ya)?
        if (xb % xa != 0) return false;
        const int k = xb / xa;
        if (k % 2 == 1) return reduced_mod(yb) == reduced_mod(static_cast<long long>(k) * ya);
        return reduced_mod(yb) == reduced_mod(static_cast<long long>(k) * ya + p.b);
    };
    if (redundant(p.x1, p.y1, p.x2, p.y2)) return TwoMoveGame{p.b, p.x1, p.y1 % twob};
    if (redundant(p.x2, p.y2, p.x1, p.y1)) return TwoMoveGame{p.b, p.x2, p.y2 % twob};
    return std::nullopt;
}

std::optional<SporadicEntry> sporadic_lookup(const LengyelParams& in) {
    const LengyelParams p = canonical(in);
    const int b = p.b;

    // Transfers that climb exactly b land on flipped values, so with both of
    // them doing it every column collapses to the vertical 0^b 1^b pattern.
    if (p.y1 == b && p.y2 == b) return SporadicEntry{0, 1, "flip-transfers"};

    // Both transfers climb a combined 2b: the whole array is diagonally
    // periodic with no preperiod and period x1+x2.
    if (p.y1 + p.y2 == 2 * b) return SporadicEntry{0, p.x1 + p.x2, "opposite-transfers"};

    // Unit transfers a flip apart: columns alternate, period 2.
    if (p.x1 == 1 && p.x2 == 1 && std::abs(p.y1 - p.y2) == b)
        return SporadicEntry{0, 2, "twin-unit-transfers"};

    // Long-preperiod family L(b;1,0;1,b-1) / L(b;1,0;1,b+1).
    if (p.x1 == 1 && p.y1 == 0 && p.x2 == 1 && (p.y2 == b - 1 || p.y2 == b + 1)) {
        if (b % 2 == 1) return SporadicEntry{b - 1, 2, "long-preperiod-family"};
        return SporadicEntry{b - 2, 4 * b, "long-preperiod-family"};
    }

    // Four isolated cases found by search; an eventual redundancy aligns the
    // two transfer options after the stated preperiod.
    if (p.y1 == 0) {
        const auto key = std::array{b, p.x1, p.x2, p.y2};
        if (key == std::array{2, 2, 3, 1} || key == std::array{2, 2, 3, 3})
            return SporadicEntry{10, 4, "sporadic-pair"};
        if (key == std::array{3, 3, 2, 1} || key == std::array{3, 3, 2, 5})
            return SporadicEntry{5, 6, "sporadic-pair"};
    }

    // Adjacent transfer widths over b = 1, odd first width: period 2, the
    // preperiod is left to detection.
    if (b == 1 && p.y1 == 0 && p.y2 == 1 && p.x1 % 2 == 1 &&
        (p.x2 == p.x1 - 1 || p.x2 == p.x1 + 1))
        return SporadicEntry{std::nullopt, 2, "adjacent-transfer-family"};

    return std::nullopt;
}

Prediction predict(const LengyelParams& in) {
    if (!in.valid()) throw std::invalid_argument("invalid transfer game parameters");

    // Values only depend on the y's mod 2b.
    LengyelParams p = in;
    p.y1 %= 2 * p.b;
    p.y2 %= 2 * p.b;

    const DilationReduction dil = dilation_reduce(p);
    Prediction r = predict_reduced(dil.reduced);
    if (dil.m == 1 && dil.n == 1) return r;

    // Dilation turns every cell into an m x n block, scaling period components
    // above 1 and the preperiod with it.
    if (r.horizontal_period && *r.horizontal_period > 1) *r.horizontal_period *= dil.m;
    if (r.vertical_period && *r.vertical_period > 1) *r.vertical_period *= dil.n;
    if (r.preperiod) *r.preperiod *= dil.m;
    if (r.divisor_bound) *r.divisor_bound *= dil.m;
    r.provenance += "+dilation";
    return r;
}

int multitransfer_period(int b) {
    if (b < 2)
        throw std::invalid_argument("the b+2 formula needs b >= 2; b = 1 collapses to the "
                                    "unit-transfer game of period 2");
    return b + 2;
}

}  // namespace grundy
