#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "grundy/game.hpp"

namespace grundy {

struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Game spec grammar, whitespace-insensitive:
//   L(b;x1,y1;x2,y2)     three-move transfer game
//   L2(b;x1,y1)          two-move game {(0,-b), (-x1,y1)}
//   Lstar(a,b,c)         {(-a,0), (0,-b)} plus (-j,j) for j = 1..c
//   V[(c1,c2,...);...]   raw move vectors, any dimension, lex-negative
GameRules parse_spec(const std::string& text);

}  // namespace grundy
