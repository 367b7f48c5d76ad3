#pragma once

#include <optional>
#include <string>
#include <utility>

#include "grundy/game.hpp"

namespace grundy {

enum class PredictionKind { ExactPeriod, DivisorBound, Reduction, Sporadic, NoPrediction };

const char* to_string(PredictionKind k);

struct Prediction {
    PredictionKind kind = PredictionKind::NoPrediction;
    std::optional<int> preperiod;
    std::optional<int> horizontal_period;
    std::optional<int> vertical_period;
    std::optional<long long> divisor_bound;  // g: every horizontal period divides it
    std::optional<GameRules> reduced_to;
    std::string provenance;
};

// g = 2b(x1+x2) / gcd(2b, y1+y2); every horizontal period divides it.
long long g_bound(const LengyelParams& p);

// Period of the two-move game {(0,-b), (-x1,y1)}: (1, 2b) when y1 is an odd
// multiple of b, else (2b*x1/gcd(2b, y1+b), 2b).  No preperiod.
std::pair<int, int> two_move_period(int b, int x1, int y1);

// Period of L(b;x1,0;1,1): (2,2) for (1,1); (2b,2b) when b is even and x1 an
// odd multiple of b; (2b(x1+1), 2b) otherwise.
std::pair<int, int> theorem1_period(int b, int x1);

// For even b, zero cells of L(b;b,0;1,1) are exactly those with
// floor((x+y)/b) + x even.
bool p_position_formula(int b, int x, int y);

struct DilationReduction {
    LengyelParams reduced;
    int m = 1;  // x-components divided by m
    int n = 1;  // b and y-components divided by n
};

DilationReduction dilation_reduce(const LengyelParams& p);

// One transfer move is redundant when the other reaches the same cells with
// matching (or flipped, via an added b) values; the game then equals the
// two-move game on the surviving transfer.  Requires y1, y2 < 2b.
struct TwoMoveGame {
    int b = 1;
    int x1 = 1;
    int y1 = 0;
};
std::optional<TwoMoveGame> vector_elimination(const LengyelParams& p);

struct SporadicEntry {
    std::optional<int> preperiod;  // absent: detect empirically
    int period = 0;
    std::string provenance;
};

// Closed-form (preperiod, period) for the special families with y's already
// reduced below 2b and gcds extracted.
std::optional<SporadicEntry> sporadic_lookup(const LengyelParams& p);

// Full dispatcher; see the per-rule helpers for the individual cases.
Prediction predict(const LengyelParams& p);

// Horizontal period b+2 of the multitransfer game with a = b = c, for b >= 2.
int multitransfer_period(int b);

}  // namespace grundy
