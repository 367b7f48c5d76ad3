#include "grundy/periodicity.hpp"

#include <algorithm>
#include <map>

namespace grundy {

NimPeriodicityCheck check_nim_periodicity(const SgTable& table, int b) {
    if (b < 1) throw std::invalid_argument("b must be positive");
    if (table.dim() != 2) throw std::invalid_argument("nim-periodicity check needs a 2-D table");
    if (table.height() < b + 1)
        throw std::invalid_argument("window too small: need height of at least b+1 rows");
    const int W = table.width();
    const int rows = std::min(table.height() - b, table.stored_rows());
    for (int x = 0; x < W; ++x)
        for (int y = 0; y < rows; ++y)
            if (table.value(x, y + b) != (table.value(x, y) ^ 1))
                return {false, std::make_pair(x, y)};
    return {true, std::nullopt};
}

std::vector<int> nim_periodic_move_indices(const GameRules& rules) {
    std::vector<int> out;
    for (size_t i = 0; i < rules.moves.size(); ++i) {
        const Move& m = rules.moves[i];
        int axis = -1;
        bool single = true;
        for (int k = 0; k < rules.dimension; ++k) {
            if (m[k] == 0) continue;
            if (axis != -1 || m[k] > 0) {
                single = false;
                break;
            }
            axis = k;
        }
        if (!single || axis < 0) continue;
        bool others_ok = true;
        for (size_t j = 0; j < rules.moves.size(); ++j) {
            if (j == i) continue;
            if (rules.moves[j][axis] < 0) {
                others_ok = false;
                break;
            }
        }
        if (others_ok) out.push_back(static_cast<int>(i));
    }
    return out;
}

int max_value_bound(const GameRules& rules) {
    const int k = static_cast<int>(rules.moves.size());
    const int l = static_cast<int>(nim_periodic_move_indices(rules).size());
    const int d = k - l;
    return std::max(d, d ^ 1);
}

PeriodReport detect_horizontal_period(const SgTable& table, int b) {
    if (table.dim() != 2) throw std::invalid_argument("period detection needs a 2-D table");
    if (table.height() < 2 * b)
        throw std::invalid_argument("window too small: need at least 2b rows of the table");
    const auto nim = check_nim_periodicity(table, b);
    if (!nim.holds)
        throw detection_error("nim-periodicity does not hold on this table; "
                              "column fingerprints would not determine the rest");

    int M = 1;
    for (const Move& m : table.rules().moves) M = std::max(M, -m[0]);
    const int W = table.width();
    if (W < 2 * M + 2)
        throw std::invalid_argument("window too small: need a width of at least 2M+2 columns");

    // Hash-cons the column fingerprints (first 2b rows determine the column).
    std::map<std::vector<std::uint8_t>, int> interned;
    std::vector<int> id(W);
    for (int x = 0; x < W; ++x) {
        std::vector<std::uint8_t> fp(2 * b);
        for (int y = 0; y < 2 * b; ++y) fp[y] = static_cast<std::uint8_t>(table.value(x, y));
        id[x] = static_cast<int>(interned.emplace(std::move(fp), interned.size()).first->second);
    }

    for (int p = 1; p + M <= W; ++p) {
        int s = 0;
        for (int x = W - p - 1; x >= 0; --x) {
            if (id[x] != id[x + p]) {
                s = x + 1;
                break;
            }
        }
        if (s + M + p <= W) {
            PeriodReport r;
            r.preperiod = s;
            r.horizontal_period = p;
            r.vertical_period = 2 * b;
            r.certified = true;
            r.witness_column = s + M - 1;
            r.state_width = M;
            r.window_width = W;
            r.window_height = table.height();
            return r;
        }
    }
    throw detection_error("no certified horizontal period within the examined window");
}

bool certify_period_block(const LengyelParams& params, int p, int q, const TableLimits& limits) {
    if (p < 1 || q < 1) throw std::invalid_argument("candidate period components must be positive");
    const int m = std::max({p, params.x1, params.x2});
    const int n = std::max({q, params.b, params.y1, params.y2});
    SgTable t = compute_sg_table(build_lengyel(params), {2 * m, 2 * n}, limits);
    for (int x = 0; x < 2 * m; ++x) {
        for (int y = 0; y < 2 * n; ++y) {
            if (x + p < 2 * m && t.value(x, y) != t.value(x + p, y)) return false;
            if (y + q < 2 * n && t.value(x, y) != t.value(x, y + q)) return false;
        }
    }
    return true;
}

TwoColumnReport classify_2columns(const SgTable& table) {
    const auto params = lengyel_params_of(table.rules());
    if (!params) throw std::invalid_argument("2-column classification needs a three-move transfer game");
    TwoColumnReport r;
    const int W = table.width();
    const int rows = std::min(table.height(), table.stored_rows());
    for (int x = 0; x < W; ++x) {
        for (int y = 0; y < rows; ++y) {
            if (table.value(x, y) >= 2) {
                r.two_columns.push_back(x);
                break;
            }
        }
    }
    const int x_small = std::min(params->x1, params->x2);
    const int x_large = std::max(params->x1, params->x2);
    const int span = params->x1 + params->x2;
    for (int c : r.two_columns) {
        const int residue = c % span;
        if (residue < x_large || residue > x_large + x_small - 1) {
            r.block_rule_holds = false;
            break;
        }
    }
    return r;
}

bool check_row_parity(const SgTable& table, int b) {
    const int rows = std::min(table.height(), table.stored_rows());
    for (int x = 0; x < table.width(); ++x) {
        for (int y = 0; y < rows; ++y) {
            const int v = table.value(x, y);
            const int residue = y % (2 * b);
            if (residue < b ? v == 3 : v == 2) return false;
        }
    }
    return true;
}

BadPairReport find_bad_pairs(const SgTable& table, const LengyelParams& params) {
    BadPairReport r;
    const int dx = params.x1 - params.x2;
    const int dy = params.y2 - params.y1;
    if (dx == 0 && dy == 0) return r;  // duplicate transfer, no pairs by definition
    const int W = table.width();
    const int H = table.height();

    auto star2 = [&](int x, int y) {
        return x >= 0 && x < W && y >= 0 && y < H && table.value(x, y) >= 2;
    };

    for (int x = 0; x < W; ++x)
        for (int y = 0; y < H; ++y)
            if (star2(x, y) && star2(x - dx, y - dy))
                r.pairs.push_back({{x, y}, {x - dx, y - dy}});

    // Maximal runs along the step: every consecutive pair in a run is bad.
    for (int x = 0; x < W; ++x) {
        for (int y = 0; y < H; ++y) {
            if (!star2(x, y) || star2(x - dx, y - dy)) continue;  // not a run head
            int len = 1;
            while (star2(x + len * dx, y + len * dy)) ++len;
            if (len >= 2) r.chains.push_back({{x, y}, {dx, dy}, len});
        }
    }
    return r;
}

std::optional<int> check_diagonal_periodicity(const SgTable& table, const LengyelParams& params) {
    const int dx = params.x1 + params.x2;
    const int dy = params.y1 + params.y2;
    const int W = table.width();
    const int H = table.height();
    if (H <= dy) throw std::invalid_argument("window too small: need height above y1+y2");
    if (W <= 3 * dx) throw std::invalid_argument("window too small: need width above 3(x1+x2)");

    int last_violation = -1;
    for (int x = 0; x + dx < W; ++x)
        for (int y = dy; y < H; ++y)
            if (sg_star_value(table.value(x, y)) != sg_star_value(table.value(x + dx, y - dy)))
                last_violation = std::max(last_violation, x);

    if (last_violation < 0) return 0;
    // Violations running into the right edge mean no stable x0 was seen.
    if (last_violation >= W - 2 * dx) return std::nullopt;
    return last_violation + 1;
}

}  // namespace grundy
