#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "grundy/table.hpp"

namespace grundy {

// Raised when no certified period fits in the examined window.
struct detection_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NimPeriodicityCheck {
    bool holds = false;
    // Lexicographically least (x, y) with SG(x, y+b) != SG(x, y) ^ 1.
    std::optional<std::pair<int, int>> counterexample;
};

// Checks SG(x, y+b) = SG(x, y) ^ 1 over the whole window.
NimPeriodicityCheck check_nim_periodicity(const SgTable& table, int b);

// Indices of moves -b*e_k (single negative coordinate) where every other move
// is nonnegative on axis k.  Such a move flips values: SG after it is SG ^ 1.
std::vector<int> nim_periodic_move_indices(const GameRules& rules);

// With k moves of which l flip values, no position exceeds max{k-l, (k-l)^1}.
int max_value_bound(const GameRules& rules);

struct PeriodReport {
    int preperiod = 0;          // columns before the periodic part
    int horizontal_period = 0;  // minimal certified eventual period p
    int vertical_period = 0;    // 2b
    bool certified = false;
    int witness_column = 0;  // x* whose M-column state repeats at x* + p
    int state_width = 0;     // M = max |x-component| over moves
    int window_width = 0;
    int window_height = 0;
};

// Certified horizontal-period detection.  Columns are fingerprinted by their
// first 2b rows; a column is a function of the previous M columns'
// fingerprints once the vertical flip holds, so a repeated M-column state at
// distance p proves eventual periodicity with period p.  Reports the minimal
// certified p and, for it, the minimal starting column.
PeriodReport detect_horizontal_period(const SgTable& table, int b);

// Block check for a candidate (p, q) of a game with no preperiod: computes a
// 2m x 2n table, m = max{p, x1, x2}, n = max{q, b, y1, y2}, and compares all
// in-block shifts.
bool certify_period_block(const LengyelParams& params, int p, int q,
                          const TableLimits& limits = {});

struct TwoColumnReport {
    std::vector<int> two_columns;  // columns holding a value >= 2
    // All of them fall in the residues x_large .. x_large+x_small-1 mod (x1+x2).
    bool block_rule_holds = true;
};

TwoColumnReport classify_2columns(const SgTable& table);

// Rows congruent to 0..b-1 mod 2b carry no 3, the others no 2.
bool check_row_parity(const SgTable& table, int b);

struct BadPair {
    // star value 2 at both cells, offset (x1-x2, y2-y1): they share an option.
    std::pair<int, int> cell;     // (x, y)
    std::pair<int, int> partner;  // (x', y') = cell - offset
};

struct Chain {
    std::pair<int, int> start;
    std::pair<int, int> step;
    int length = 0;  // number of cells; every consecutive pair is bad
};

struct BadPairReport {
    std::vector<BadPair> pairs;
    std::vector<Chain> chains;
};

BadPairReport find_bad_pairs(const SgTable& table, const LengyelParams& params);

// Least x0 with SG*(x, y) = SG*(x+x1+x2, y-y1-y2) for every in-window cell
// with x >= x0, y >= y1+y2; nullopt when violations run to the window edge.
std::optional<int> check_diagonal_periodicity(const SgTable& table, const LengyelParams& params);

struct StructureReport {
    bool nim_periodic = false;
    std::optional<std::pair<int, int>> nim_counterexample;
    std::vector<int> two_columns;
    bool two_block_rule_holds = true;
    int bad_pair_count = 0;
    int last_bad_pair_column = -1;
    int longest_chain = 0;
    std::optional<int> diagonal_from;
};

}  // namespace grundy
