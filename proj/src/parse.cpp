#include "grundy/parse.hpp"

#include <cctype>

namespace grundy {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool try_eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void eat(char c) {
        if (!try_eat(c))
            throw parse_error(std::string("expected '") + c + "'", pos_);
    }

    // Maximal alphanumeric run: the spec keyword.
    std::string word() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    int integer() {
        skip_ws();
        size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        long long v = 0;
        bool any = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000) throw parse_error("integer out of range", start);
            ++pos_;
            any = true;
        }
        if (!any) throw parse_error("expected an integer", pos_);
        return static_cast<int>(neg ? -v : v);
    }

    void expect_end() {
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("trailing input", pos_);
    }

    size_t pos() const { return pos_; }

private:
    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

GameRules parse_spec(const std::string& text) {
    Cursor c(text);
    const std::string kind = c.word();
    if (kind == "Lstar") {
        c.eat('(');
        const int a = c.integer();
        c.eat(',');
        const int b = c.integer();
        c.eat(',');
        const int cc = c.integer();
        c.eat(')');
        c.expect_end();
        if (a < 1 || b < 1 || cc < 1)
            throw parse_error("Lstar needs three positive integers", 0);
        return build_multitransfer(a, b, cc);
    }
    if (kind == "L2") {
        c.eat('(');
        const int b = c.integer();
        c.eat(';');
        const int x1 = c.integer();
        c.eat(',');
        const int y1 = c.integer();
        c.eat(')');
        c.expect_end();
        if (b < 1 || x1 < 1 || y1 < 0)
            throw parse_error("L2 needs b >= 1, x1 >= 1, y1 >= 0", 0);
        return build_two_move(b, x1, y1);
    }
    if (kind == "L") {
        c.eat('(');
        const int b = c.integer();
        c.eat(';');
        const int x1 = c.integer();
        c.eat(',');
        const int y1 = c.integer();
        c.eat(';');
        const int x2 = c.integer();
        c.eat(',');
        const int y2 = c.integer();
        c.eat(')');
        c.expect_end();
        LengyelParams p{b, x1, y1, x2, y2};
        if (!p.valid())
            throw parse_error("L needs b,x1,x2 >= 1 and y1,y2 >= 0", 0);
        return build_lengyel(p);
    }
    if (kind == "V") {
        c.eat('[');
        std::vector<Move> moves;
        do {
            c.eat('(');
            Move m;
            m.push_back(c.integer());
            while (c.try_eat(',')) m.push_back(c.integer());
            c.eat(')');
            if (!is_lex_negative(m))
                throw parse_error("raw vector is not lex-negative", c.pos());
            moves.push_back(std::move(m));
        } while (c.try_eat(';'));
        c.eat(']');
        c.expect_end();
        if (moves.empty()) throw parse_error("V needs at least one vector", c.pos());
        const size_t dim = moves.front().size();
        for (const Move& m : moves)
            if (m.size() != dim) throw parse_error("vectors differ in length", c.pos());
        GameRules rules = make_rules(static_cast<int>(dim), std::move(moves));
        // Label from the canonical move order so parsing the label round-trips.
        std::string label = "V[";
        for (size_t i = 0; i < rules.moves.size(); ++i) {
            label += i ? ";(" : "(";
            for (size_t k = 0; k < rules.moves[i].size(); ++k)
                label += (k ? "," : "") + std::to_string(rules.moves[i][k]);
            label += ")";
        }
        label += "]";
        rules.label = std::move(label);
        return rules;
    }
    throw parse_error("expected one of L(...), L2(...), Lstar(...), V[...]", c.pos());
}

}  // namespace grundy
