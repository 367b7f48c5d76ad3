#include "grundy/table.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>

namespace grundy {

namespace {

constexpr std::uint64_t kDefaultMaxCells = 50'000'000;

// Axis of the first negative component.
int pivot_axis(const Move& m) {
    for (size_t k = 0; k < m.size(); ++k)
        if (m[k] != 0) return static_cast<int>(k);
    return -1;
}

// Extents that make every cell of the requested box exact: a chain of options
// starting inside the box can raise axis k only through moves pivoted on an
// earlier axis, and each such move spends at least one unit of that axis.
std::vector<std::uint64_t> padded_extents(const GameRules& rules, const std::vector<int>& shape) {
    const int n = rules.dimension;
    std::vector<std::uint64_t> reach(n);
    for (int k = 0; k < n; ++k) {
        std::uint64_t r = static_cast<std::uint64_t>(shape[k]) - 1;
        for (int j = 0; j < k; ++j) {
            int raise = 0;
            for (const Move& m : rules.moves)
                if (pivot_axis(m) == j && m[k] > 0) raise = std::max(raise, m[k]);
            if (raise > 0) {
                if (reach[j] > (std::uint64_t{1} << 40))
                    throw budget_error("padded extent overflow while sizing the table");
                r += reach[j] * static_cast<std::uint64_t>(raise);
            }
        }
        reach[k] = r;
    }
    for (auto& e : reach) ++e;  // extent = max coordinate + 1
    return reach;
}

std::uint64_t checked_product(const std::vector<std::uint64_t>& extents, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::uint64_t e : extents) {
        if (e == 0 || total > cap / e) return cap + 1;
        total *= e;
    }
    return total;
}

// Dense lexicographic evaluation over the padded box.  Options leading above
// the padded box are skipped; by construction no cell of the trusted region
// depends on one.
std::vector<std::uint8_t> evaluate_dense(const GameRules& rules,
                                         const std::vector<std::uint64_t>& ext) {
    const int n = rules.dimension;
    std::vector<std::uint64_t> stride(n);
    stride[n - 1] = 1;
    for (int k = n - 2; k >= 0; --k) stride[k] = stride[k + 1] * ext[k + 1];
    const std::uint64_t total = stride[0] * ext[0];
    std::vector<std::uint8_t> v(total);

    if (n == 2) {
        const int W = static_cast<int>(ext[0]);
        const int H = static_cast<int>(ext[1]);
        struct Arm {
            const std::uint8_t* base;
            int dy;
        };
        std::vector<Arm> arms;
        arms.reserve(rules.moves.size());
        for (int x = 0; x < W; ++x) {
            std::uint8_t* col = v.data() + static_cast<std::uint64_t>(x) * H;
            arms.clear();
            for (const Move& m : rules.moves)
                if (x + m[0] >= 0)
                    arms.push_back({v.data() + static_cast<std::uint64_t>(x + m[0]) * H, m[1]});
            for (int y = 0; y < H; ++y) {
                std::uint64_t mask = 0;
                for (const Arm& a : arms) {
                    const int yy = y + a.dy;
                    if (yy >= 0 && yy < H) mask |= std::uint64_t{1} << a.base[yy];
                }
                col[y] = static_cast<std::uint8_t>(std::countr_one(mask));
            }
        }
        return v;
    }

    std::vector<std::int64_t> offset(rules.moves.size());
    for (size_t i = 0; i < rules.moves.size(); ++i) {
        std::int64_t o = 0;
        for (int k = 0; k < n; ++k) o += static_cast<std::int64_t>(rules.moves[i][k]) * stride[k];
        offset[i] = o;
    }
    std::vector<int> pos(n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t mask = 0;
        for (size_t i = 0; i < rules.moves.size(); ++i) {
            bool legal = true;
            for (int k = 0; k < n; ++k) {
                const int q = pos[k] + rules.moves[i][k];
                if (q < 0 || q >= static_cast<int>(ext[k])) {
                    legal = false;
                    break;
                }
            }
            if (legal) mask |= std::uint64_t{1} << v[idx + offset[i]];
        }
        v[idx] = static_cast<std::uint8_t>(std::countr_one(mask));
        for (int k = n - 1; k >= 0; --k) {
            if (++pos[k] < static_cast<int>(ext[k])) break;
            pos[k] = 0;
        }
    }
    return v;
}

struct TableParts {
    int stored_rows = 0;
    std::vector<std::uint8_t> values;
};

// Transfer-shaped games repeat every 2b rows.  Compute an exact prefix, check
// the flip SG(x,y+b) = SG(x,y)^1 on it, then build every column from its
// first 2b rows with option rows reduced mod 2b.
TableParts evaluate_compressed(const GameRules& rules, const std::vector<int>& shape,
                               const TableLimits& limits) {
    const int b = *vertical_drop(rules);
    const int W = shape[0];
    const int rows = 2 * b;

    int max_x = 1;
    for (const Move& m : rules.moves) max_x = std::max(max_x, -m[0]);
    const int prefix_w = std::min(W, std::max(4 * max_x + 4, 16));
    const int prefix_h = 4 * b;
    TableLimits exact_only{limits.effective_max_cells(), false};
    SgTable prefix = compute_sg_table(rules, {prefix_w, prefix_h}, exact_only);
    for (int x = 0; x < prefix_w; ++x)
        for (int y = 0; y + b < prefix_h; ++y)
            if (prefix.value(x, y + b) != (prefix.value(x, y) ^ 1))
                throw std::logic_error("vertical flip failed on the exact prefix; "
                                       "compressed table would be unsound");

    const std::uint64_t total = static_cast<std::uint64_t>(W) * rows;
    if (total > limits.effective_max_cells())
        throw budget_error("table exceeds the cell budget even with row compression");
    std::vector<std::uint8_t> v(total);
    for (int x = 0; x < W; ++x) {
        std::uint8_t* col = v.data() + static_cast<std::uint64_t>(x) * rows;
        for (int y = 0; y < rows; ++y) {
            std::uint64_t mask = 0;
            for (const Move& m : rules.moves) {
                if (m[0] == 0) {
                    if (y + m[1] >= 0) mask |= std::uint64_t{1} << col[y + m[1]];
                } else if (x + m[0] >= 0) {
                    const std::uint8_t* src = v.data() + static_cast<std::uint64_t>(x + m[0]) * rows;
                    mask |= std::uint64_t{1} << src[(y + m[1]) % rows];
                }
            }
            col[y] = static_cast<std::uint8_t>(std::countr_one(mask));
        }
    }

    for (int x = 0; x < prefix_w; ++x)
        for (int y = 0; y < std::min(rows, prefix_h); ++y)
            if (v[static_cast<std::uint64_t>(x) * rows + y] != prefix.value(x, y))
                throw std::logic_error("compressed table disagrees with the exact prefix");

    return {rows, std::move(v)};
}

TableParts trim_to_shape(const GameRules& rules, const std::vector<int>& shape,
                         const std::vector<std::uint64_t>& ext,
                         const std::vector<std::uint8_t>& padded) {
    const int n = rules.dimension;
    std::vector<std::uint64_t> pstride(n), tstride(n);
    pstride[n - 1] = tstride[n - 1] = 1;
    for (int k = n - 2; k >= 0; --k) {
        pstride[k] = pstride[k + 1] * ext[k + 1];
        tstride[k] = tstride[k + 1] * static_cast<std::uint64_t>(shape[k + 1]);
    }
    std::uint64_t total = tstride[0] * shape[0];
    std::vector<std::uint8_t> out(total);
    std::vector<int> pos(n, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        std::uint64_t src = 0;
        for (int k = 0; k < n; ++k) src += pos[k] * pstride[k];
        out[i] = padded[src];
        for (int k = n - 1; k >= 0; --k) {
            if (++pos[k] < shape[k]) break;
            pos[k] = 0;
        }
    }
    return {n >= 2 ? shape[1] : 1, std::move(out)};
}

}  // namespace

std::uint64_t TableLimits::effective_max_cells() const {
    if (max_cells > 0) return max_cells;
    if (const char* env = std::getenv("GRUNDY_MAX_CELLS")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && parsed > 0) return parsed;
    }
    return kDefaultMaxCells;
}

int SgTable::value(int x, int y) const {
    if (dim() != 2) throw std::logic_error("2-D accessor used on a non-2-D table");
    if (x < 0 || x >= shape_[0] || y < 0 || y >= shape_[1])
        throw std::out_of_range("table access outside the computed box");
    const int yy = y < stored_rows_ ? y : y % stored_rows_;
    return values_[static_cast<std::uint64_t>(x) * stored_rows_ + yy];
}

int SgTable::value(std::span<const int> pos) const {
    if (static_cast<int>(pos.size()) != dim())
        throw std::invalid_argument("position length does not match table dimension");
    if (dim() == 2) return value(pos[0], pos[1]);
    std::uint64_t idx = 0;
    for (int k = 0; k < dim(); ++k) {
        if (pos[k] < 0 || pos[k] >= shape_[k])
            throw std::out_of_range("table access outside the computed box");
        idx += pos[k] * strides_[k];
    }
    return values_[idx];
}

std::span<const std::uint8_t> SgTable::column(int x) const {
    if (dim() != 2) throw std::logic_error("column access on a non-2-D table");
    return {values_.data() + static_cast<std::uint64_t>(x) * stored_rows_,
            static_cast<size_t>(stored_rows_)};
}

int SgTable::max_value() const {
    int best = 0;
    for (std::uint8_t v : values_) best = std::max(best, static_cast<int>(v));
    return best;
}

SgTable compute_sg_table(const GameRules& rules, const std::vector<int>& shape,
                         const TableLimits& limits) {
    if (static_cast<int>(shape.size()) != rules.dimension)
        throw std::invalid_argument("shape length does not match game dimension");
    for (int e : shape)
        if (e < 1) throw std::invalid_argument("every table extent must be at least 1");

    const std::uint64_t cap = limits.effective_max_cells();
    const auto ext = padded_extents(rules, shape);
    TableParts parts;
    if (checked_product(ext, cap) <= cap) {
        auto padded = evaluate_dense(rules, ext);
        parts = trim_to_shape(rules, shape, ext, padded);
    } else if (limits.allow_compressed && rules.dimension == 2 && is_transfer_shaped(rules)) {
        parts = evaluate_compressed(rules, shape, limits);
    } else {
        throw budget_error("exact table of " + std::to_string(shape[0]) + " columns needs " +
                           "more than the configured cell budget");
    }

    SgTable t;
    t.rules_ = rules;
    t.shape_ = shape;
    const int n = rules.dimension;
    t.stored_rows_ = n == 2 ? parts.stored_rows : (n > 2 ? shape[n - 1] : 1);
    t.values_ = std::move(parts.values);
    t.strides_.assign(n, 1);
    for (int k = n - 2; k >= 0; --k) {
        const std::uint64_t extent =
            (n == 2 && k + 1 == 1) ? static_cast<std::uint64_t>(t.stored_rows_)
                                   : static_cast<std::uint64_t>(shape[k + 1]);
        t.strides_[k] = t.strides_[k + 1] * extent;
    }
    return t;
}

int sg_star_value(int v) {
    if (v > 3) throw std::domain_error("values above 3 have no star collapse");
    return v == 3 ? 2 : v;
}

StarGrid sg_star(const SgTable& table) {
    StarGrid g;
    g.width = table.width();
    g.height = table.height();
    g.values.resize(static_cast<size_t>(g.width) * g.height);
    for (int x = 0; x < g.width; ++x)
        for (int y = 0; y < g.height; ++y)
            g.values[static_cast<size_t>(x) * g.height + y] =
                static_cast<std::uint8_t>(sg_star_value(table.value(x, y)));
    return g;
}

}  // namespace grundy
