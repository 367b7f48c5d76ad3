#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grundy {

// A move is an integer vector added to the current position.  Legal moves are
// lex-negative: the first nonzero component is negative, which makes the
// lexicographic order a strictly decreasing monovariant and the game loop-free.
using Move = std::vector<int>;

// A position is a point of N^n.
using Position = std::vector<int>;

bool is_lex_negative(const Move& m);

// Least nonnegative integer not contained in `values`.
int mex(const std::vector<int>& values);

struct GameRules {
    int dimension = 0;
    std::vector<Move> moves;  // sorted, deduplicated, all lex-negative
    std::string label;
};

// Parameters of the three-move transfer game with moves
// {(0,-b), (-x1,y1), (-x2,y2)}: remove b tokens from the second pile, or move
// tokens from the first pile while adding some to the second.
struct LengyelParams {
    int b = 1;
    int x1 = 1;
    int y1 = 0;
    int x2 = 1;
    int y2 = 0;

    bool valid() const { return b >= 1 && x1 >= 1 && x2 >= 1 && y1 >= 0 && y2 >= 0; }
    std::string label() const;

    bool operator==(const LengyelParams&) const = default;
};

// Validates, deduplicates and sorts the move set.
GameRules make_rules(int dimension, std::vector<Move> moves, std::string label = {});

GameRules build_lengyel(const LengyelParams& p);
GameRules build_two_move(int b, int x1, int y1);
// Moves {(-a,0), (0,-b)} plus the transfers (-j,j) for 1 <= j <= c.
GameRules build_multitransfer(int a, int b, int c);

// All positions reachable from `pos` in one move (coordinates stay >= 0).
std::vector<Position> options(const GameRules& rules, const Position& pos);

// Shape recognition, independent of how the rules were built.
std::optional<LengyelParams> lengyel_params_of(const GameRules& rules);

struct TwoMoveParams {
    int b = 1;
    int x1 = 1;
    int y1 = 0;
};
std::optional<TwoMoveParams> two_move_params_of(const GameRules& rules);

struct MultitransferParams {
    int a = 1;
    int b = 1;
    int c = 1;
};
std::optional<MultitransferParams> multitransfer_params_of(const GameRules& rules);

// Size b of the unique (0,-b) move of a 2-D game, if there is exactly one
// move supported on the second axis alone.
std::optional<int> vertical_drop(const GameRules& rules);

// True when the 2-D rules consist of one (0,-b) move and otherwise only
// transfer moves (-x,y) with x > 0, y >= 0.  These games flip values under a
// vertical shift by b, so their tables repeat every 2b rows.
bool is_transfer_shaped(const GameRules& rules);

}  // namespace grundy
