#include "grundy/game.hpp"

#include <algorithm>
#include <set>

namespace grundy {

bool is_lex_negative(const Move& m) {
    for (int c : m) {
        if (c < 0) return true;
        if (c > 0) return false;
    }
    return false;  // zero vector
}

int mex(const std::vector<int>& values) {
    std::vector<bool> seen(values.size() + 1, false);
    for (int v : values)
        if (v >= 0 && v <= static_cast<int>(values.size())) seen[v] = true;
    int m = 0;
    while (seen[m]) ++m;
    return m;
}

std::string LengyelParams::label() const {
    return "L(" + std::to_string(b) + ";" + std::to_string(x1) + "," + std::to_string(y1) + ";" +
           std::to_string(x2) + "," + std::to_string(y2) + ")";
}

GameRules make_rules(int dimension, std::vector<Move> moves, std::string label) {
    if (dimension < 1) throw std::invalid_argument("game dimension must be positive");
    std::set<Move> unique;
    for (const Move& m : moves) {
        if (static_cast<int>(m.size()) != dimension)
            throw std::invalid_argument("move length does not match game dimension");
        if (!is_lex_negative(m))
            throw std::invalid_argument("move is not lex-negative: first nonzero component must be negative");
        unique.insert(m);
    }
    if (unique.empty()) throw std::invalid_argument("a game needs at least one move");
    if (unique.size() > 60) throw std::invalid_argument("move sets above 60 moves are not supported");
    GameRules r;
    r.dimension = dimension;
    r.moves.assign(unique.begin(), unique.end());
    r.label = std::move(label);
    return r;
}

GameRules build_lengyel(const LengyelParams& p) {
    if (!p.valid())
        throw std::invalid_argument("transfer game needs b >= 1, x1,x2 >= 1 and y1,y2 >= 0");
    return make_rules(2, {{0, -p.b}, {-p.x1, p.y1}, {-p.x2, p.y2}}, p.label());
}

GameRules build_two_move(int b, int x1, int y1) {
    if (b < 1 || x1 < 1 || y1 < 0)
        throw std::invalid_argument("two-move game needs b >= 1, x1 >= 1, y1 >= 0");
    return make_rules(2, {{0, -b}, {-x1, y1}},
                      "L2(" + std::to_string(b) + ";" + std::to_string(x1) + "," + std::to_string(y1) + ")");
}

GameRules build_multitransfer(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("multitransfer game needs a, b, c >= 1");
    std::vector<Move> moves = {{-a, 0}, {0, -b}};
    for (int j = 1; j <= c; ++j) moves.push_back({-j, j});
    return make_rules(2, std::move(moves),
                      "Lstar(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
}

std::vector<Position> options(const GameRules& rules, const Position& pos) {
    if (static_cast<int>(pos.size()) != rules.dimension)
        throw std::invalid_argument("position length does not match game dimension");
    std::vector<Position> out;
    for (const Move& m : rules.moves) {
        Position q(pos.size());
        bool legal = true;
        for (size_t k = 0; k < pos.size(); ++k) {
            q[k] = pos[k] + m[k];
            if (q[k] < 0) {
                legal = false;
                break;
            }
        }
        if (legal) out.push_back(std::move(q));
    }
    return out;
}

std::optional<LengyelParams> lengyel_params_of(const GameRules& rules) {
    if (rules.dimension != 2 || rules.moves.size() != 3) return std::nullopt;
    std::vector<Move> transfers;
    int b = 0;
    for (const Move& m : rules.moves) {
        if (m[0] == 0) {
            if (b != 0) return std::nullopt;
            b = -m[1];
        } else if (m[0] < 0 && m[1] >= 0) {
            transfers.push_back(m);
        } else {
            return std::nullopt;
        }
    }
    if (b <= 0 || transfers.size() != 2) return std::nullopt;
    LengyelParams p;
    p.b = b;
    p.x1 = -transfers[0][0];
    p.y1 = transfers[0][1];
    p.x2 = -transfers[1][0];
    p.y2 = transfers[1][1];
    return p;
}

std::optional<TwoMoveParams> two_move_params_of(const GameRules& rules) {
    if (rules.dimension != 2 || rules.moves.size() != 2) return std::nullopt;
    std::optional<int> b;
    std::optional<std::pair<int, int>> transfer;
    for (const Move& m : rules.moves) {
        if (m[0] == 0) {
            b = -m[1];
        } else if (m[0] < 0 && m[1] >= 0) {
            transfer = {-m[0], m[1]};
        }
    }
    if (!b || *b <= 0 || !transfer) return std::nullopt;
    return TwoMoveParams{*b, transfer->first, transfer->second};
}

std::optional<MultitransferParams> multitransfer_params_of(const GameRules& rules) {
    if (rules.dimension != 2 || rules.moves.size() < 3) return std::nullopt;
    std::optional<int> a, b;
    std::vector<int> diagonals;
    for (const Move& m : rules.moves) {
        if (m[0] == 0 && m[1] < 0) {
            if (b) return std::nullopt;
            b = -m[1];
        } else if (m[1] == 0 && m[0] < 0) {
            if (a) return std::nullopt;
            a = -m[0];
        } else if (m[0] < 0 && m[1] == -m[0]) {
            diagonals.push_back(-m[0]);
        } else {
            return std::nullopt;
        }
    }
    if (!a || !b || diagonals.empty()) return std::nullopt;
    std::sort(diagonals.begin(), diagonals.end());
    for (size_t j = 0; j < diagonals.size(); ++j)
        if (diagonals[j] != static_cast<int>(j) + 1) return std::nullopt;
    return MultitransferParams{*a, *b, static_cast<int>(diagonals.size())};
}

std::optional<int> vertical_drop(const GameRules& rules) {
    if (rules.dimension != 2) return std::nullopt;
    std::optional<int> b;
    for (const Move& m : rules.moves) {
        if (m[0] == 0) {
            if (b) return std::nullopt;  // two vertical moves
            b = -m[1];
        }
    }
    if (b && *b > 0) return b;
    return std::nullopt;
}

bool is_transfer_shaped(const GameRules& rules) {
    if (!vertical_drop(rules)) return false;
    for (const Move& m : rules.moves) {
        if (m[0] == 0) continue;
        if (m[0] >= 0 || m[1] < 0) return false;
    }
    return true;
}

}  // namespace grundy
