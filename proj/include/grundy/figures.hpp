#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grundy/table.hpp"

namespace grundy {

struct CellDiff {
    int x = 0;
    int y = 0;
    int got = 0;
    int want = 0;
};

struct GridResult {
    std::string spec;
    int width = 0;
    int height = 0;
    bool pass = false;
    std::optional<CellDiff> first_diff;
    std::string rendered;  // ascii of the recomputed table
};

struct FigureResult {
    int id = 0;
    bool pass = false;
    std::vector<GridResult> grids;
};

// Valid ids for the embedded golden tables.
const std::vector<int>& figure_ids();

// Recompute the figure's table(s) at the published dimensions and compare
// against the embedded golden copy.  Throws std::invalid_argument for ids
// without a table (diagram-only figures and unknown ids).
FigureResult reproduce_figure(int id);

}  // namespace grundy
