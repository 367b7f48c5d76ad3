#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "grundy/game.hpp"

namespace grundy {

// Raised when the extents needed for an exact computation exceed the cell cap.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableLimits {
    std::uint64_t max_cells = 0;  // 0 = use GRUNDY_MAX_CELLS / built-in default
    bool allow_compressed = true;

    std::uint64_t effective_max_cells() const;
};

// Dense grid of Sprague-Grundy values over a box of N^n, exact on the
// requested box.  Transfer moves raise later coordinates, so the table is
// computed on an internally padded box and trimmed; for transfer-shaped 2-D
// games that would blow the cell budget, only the first 2b rows per column
// are stored and the verified vertical repetition fills in the rest.
class SgTable {
public:
    SgTable() = default;

    const GameRules& rules() const { return rules_; }
    int dim() const { return static_cast<int>(shape_.size()); }
    const std::vector<int>& shape() const { return shape_; }

    // 2-D accessors; column x, row y, origin at the top-left.
    int width() const { return shape_.at(0); }
    int height() const { return shape_.at(1); }
    int value(int x, int y) const;
    int value(std::span<const int> pos) const;

    bool compressed() const { return dim() == 2 && stored_rows_ != shape_[1]; }
    int stored_rows() const { return stored_rows_; }
    // First stored_rows() entries of column x (2-D only).
    std::span<const std::uint8_t> column(int x) const;

    int max_value() const;

    friend SgTable compute_sg_table(const GameRules&, const std::vector<int>&, const TableLimits&);

private:
    GameRules rules_;
    std::vector<int> shape_;
    int stored_rows_ = 0;  // rows kept per column (2-D); equals shape_[1] when dense
    std::vector<std::uint8_t> values_;
    std::vector<std::uint64_t> strides_;
};

SgTable compute_sg_table(const GameRules& rules, const std::vector<int>& shape,
                         const TableLimits& limits = {});

// Pointwise collapse 3 -> 2, defined for tables whose values stay below 4.
struct StarGrid {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> values;  // column-major

    int at(int x, int y) const { return values[static_cast<size_t>(x) * height + y]; }
};

StarGrid sg_star(const SgTable& table);

// 0,1,2 unchanged; 3 -> 2.  Throws std::domain_error above 3.
int sg_star_value(int v);

}  // namespace grundy
