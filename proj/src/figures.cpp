#include "grundy/figures.hpp"

#include <sstream>

#include "grundy/parse.hpp"
#include "grundy/render.hpp"

namespace grundy {

namespace {

struct GoldenGrid {
    const char* spec;
    const char* cells;  // ascii rows, y downward
};

struct GoldenFigure {
    int id;
    std::vector<GoldenGrid> grids;
};

// Transcribed golden tables.  Grid text is bit-identical to the ascii
// rendering of the recomputed table when everything is in order.
const std::vector<GoldenFigure>& goldens() {
    static const std::vector<GoldenFigure> data = {
        {1,
         {{"L(1;1,0;1,1)",
           "0 2 0 2\n"
           "1 3 1 3\n"
           "0 2 0 2\n"
           "1 3 1 3\n"}}},
        {2,
         {{"L(2;3,0;1,1)",
           "0 1 1 2 0 0 1 1 1 0 0 2 1 1 0 0\n"
           "0 0 1 1 1 0 0 2 1 1 0 0 0 1 1 2\n"
           "1 0 0 3 1 1 0 0 0 1 1 3 0 0 1 1\n"
           "1 1 0 0 0 1 1 3 0 0 1 1 1 0 0 3\n"}}},
        {3,
         {{"L2(2;1,1)",
           "0 1 1 0 0 1 1 0\n"
           "0 0 1 1 0 0 1 1\n"
           "1 0 0 1 1 0 0 1\n"
           "1 1 0 0 1 1 0 0\n"},
          {"L2(3;1,1)",
           "0 1 0 0 1 0\n"
           "0 1 1 0 1 1\n"
           "0 0 1 0 0 1\n"
           "1 0 1 1 0 1\n"
           "1 0 0 1 0 0\n"
           "1 1 0 1 1 0\n"}}},
        {5,
         {{"L(3;1,0;1,1)",
           "0 1 0 1 0 2 1 0 1 0 1 2\n"
           "0 1 0 2 1 0 1 0 1 2 0 1\n"
           "0 2 1 0 1 0 1 2 0 1 0 1\n"
           "1 0 1 0 1 3 0 1 0 1 0 3\n"
           "1 0 1 3 0 1 0 1 0 3 1 0\n"
           "1 3 0 1 0 1 0 3 1 0 1 0\n"}}},
        {6,
         {{"L(7;1,0;1,6)",
           "0 1 0 1 0 1 0 1\n"
           "0 2 1 0 1 0 1 0\n"
           "0 2 0 1 0 1 0 1\n"
           "0 2 0 2 1 0 1 0\n"
           "0 2 0 2 0 1 0 1\n"
           "0 2 0 2 0 2 1 0\n"
           "0 2 0 2 0 2 0 1\n"
           "1 0 1 0 1 0 1 0\n"
           "1 3 0 1 0 1 0 1\n"
           "1 3 1 0 1 0 1 0\n"
           "1 3 1 3 0 1 0 1\n"
           "1 3 1 3 1 0 1 0\n"
           "1 3 1 3 1 3 0 1\n"
           "1 3 1 3 1 3 1 0\n"},
          {"L(8;1,0;1,7)",
           "0 1 0 1 0 1 0 1\n"
           "0 2 1 0 1 0 1 0\n"
           "0 2 0 1 0 1 0 1\n"
           "0 2 0 2 1 0 1 0\n"
           "0 2 0 2 0 1 0 1\n"
           "0 2 0 2 0 2 1 0\n"
           "0 2 0 2 0 2 0 1\n"
           "0 2 0 2 0 2 0 2\n"
           "1 0 1 0 1 0 1 0\n"
           "1 3 0 1 0 1 0 1\n"
           "1 3 1 0 1 0 1 0\n"
           "1 3 1 3 0 1 0 1\n"
           "1 3 1 3 1 0 1 0\n"
           "1 3 1 3 1 3 0 1\n"
           "1 3 1 3 1 3 1 0\n"
           "1 3 1 3 1 3 1 3\n"},
          {"L(7;1,0;1,8)",
           "0 2 0 2 0 2 0 1\n"
           "0 2 0 2 0 2 1 0\n"
           "0 2 0 2 0 1 0 1\n"
           "0 2 0 2 1 0 1 0\n"
           "0 2 0 1 0 1 0 1\n"
           "0 2 1 0 1 0 1 0\n"
           "0 1 0 1 0 1 0 1\n"
           "1 3 1 3 1 3 1 0\n"
           "1 3 1 3 1 3 0 1\n"
           "1 3 1 3 1 0 1 0\n"
           "1 3 1 3 0 1 0 1\n"
           "1 3 1 0 1 0 1 0\n"
           "1 3 0 1 0 1 0 1\n"
           "1 0 1 0 1 0 1 0\n"},
          {"L(8;1,0;1,9)",
           "0 2 0 2 0 2 0 2\n"
           "0 2 0 2 0 2 0 1\n"
           "0 2 0 2 0 2 1 0\n"
           "0 2 0 2 0 1 0 1\n"
           "0 2 0 2 1 0 1 0\n"
           "0 2 0 1 0 1 0 1\n"
           "0 2 1 0 1 0 1 0\n"
           "0 1 0 1 0 1 0 1\n"
           "1 3 1 3 1 3 1 3\n"
           "1 3 1 3 1 3 1 0\n"
           "1 3 1 3 1 3 0 1\n"
           "1 3 1 3 1 0 1 0\n"
           "1 3 1 3 0 1 0 1\n"
           "1 3 1 0 1 0 1 0\n"
           "1 3 0 1 0 1 0 1\n"
           "1 0 1 0 1 0 1 0\n"}}},
        // The published caption for the first grid transposes two digits; the
        // printed values are the table of L(5;5,7;4,3), which is also the
        // parameterization the surrounding claim (period x1+x2 = 9, combined
        // climb y1+y2 = 2b) is about.  The middle grid's second column is
        // printed with 0/2 and 1/3 interchanged in the source; the golden here
        // is the mex-correct column.
        {7,
         {{"L(5;5,7;4,3)",
           "0 0 0 0 1 2 2 2 2\n"
           "0 0 0 0 1 2 2 2 2\n"
           "0 0 0 0 0 0 0 0 2\n"
           "0 0 0 0 0 2 2 2 1\n"
           "0 0 0 0 0 2 2 2 2\n"
           "1 1 1 1 0 3 3 3 3\n"
           "1 1 1 1 0 3 3 3 3\n"
           "1 1 1 1 1 1 1 1 3\n"
           "1 1 1 1 1 3 3 3 0\n"
           "1 1 1 1 1 3 3 3 3\n"},
          {"L(3;1,2;1,4)",
           "0 2\n"
           "0 0\n"
           "0 2\n"
           "1 3\n"
           "1 1\n"
           "1 3\n"},
          {"L(3;1,2;1,5)",
           "0 2\n"
           "0 2\n"
           "0 2\n"
           "1 3\n"
           "1 3\n"
           "1 3\n"}}},
        {8,
         {{"L(1;7,0;6,1)",
           "0 0 0 0 0 0 0 2 2 2 2 2 2 1 0 0 0 0 0 1 0 2 2 2 2 1 "
           "0 1 0 0 0 1 0 1 0 2 2 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1\n"
           "1 1 1 1 1 1 1 3 3 3 3 3 3 0 1 1 1 1 1 0 1 3 3 3 3 0 "
           "1 0 1 1 1 0 1 0 1 3 3 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0\n"},
          {"L(1;7,0;8,1)",
           "0 0 0 0 0 0 0 1 2 2 2 2 2 2 0 1 0 0 0 0 0 1 0 1 2 2 2 2 0 1 "
           "0 1 0 0 0 1 0 1 0 1 2 2 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1\n"
           "1 1 1 1 1 1 1 0 3 3 3 3 3 3 1 0 1 1 1 1 1 0 1 0 3 3 3 3 1 0 "
           "1 0 1 1 1 0 1 0 1 0 3 3 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0\n"}}},
        {9,
         {{"L(2;2,0;3,1)",
           "0 0 1 1 2 0 0 1 2 0 1 1 0 0\n"
           "0 0 1 2 0 1 1 0 0 2 1 0 0 1\n"
           "1 1 0 0 3 1 1 0 3 1 0 0 1 1\n"
           "1 1 0 3 1 0 0 1 1 3 0 1 1 0\n"},
          {"L(2;2,0;3,3)",
           "0 0 1 2 0 1 1 0 0 2 1 0 0 1\n"
           "0 0 1 1 2 0 0 1 2 0 1 1 0 0\n"
           "1 1 0 3 1 0 0 1 1 3 0 1 1 0\n"
           "1 1 0 0 3 1 1 0 3 1 0 0 1 1\n"}}},
        {10,
         {{"L(3;3,0;2,1)",
           "0 0 1 1 2 0 0 1 1 1 0\n"
           "0 0 1 1 1 0 0 0 1 1 1\n"
           "0 0 0 2 1 1 0 0 0 1 1\n"
           "1 1 0 0 3 1 1 0 0 0 1\n"
           "1 1 0 0 0 1 1 1 0 0 0\n"
           "1 1 1 3 0 0 1 1 1 0 0\n"},
          {"L(3;3,0;2,5)",
           "0 0 0 2 1 1 0 0 0 1 1\n"
           "0 0 1 1 1 0 0 0 1 1 1\n"
           "0 0 1 1 2 0 0 1 1 1 0\n"
           "1 1 1 3 0 0 1 1 1 0 0\n"
           "1 1 0 0 0 1 1 1 0 0 0\n"
           "1 1 0 0 3 1 1 0 0 0 1\n"}}},
        {11,
         {{"Lstar(6,6,6)",
           "0 1 2 3 4 5 6 7\n"
           "0 1 2 3 4 5 6 7\n"
           "0 1 2 3 4 5 6 7\n"
           "0 1 2 3 4 5 6 7\n"
           "0 1 2 3 4 5 6 7\n"
           "0 0 2 2 4 4 6 6\n"
           "1 0 3 2 5 4 7 6\n"
           "1 0 3 2 5 4 7 6\n"
           "1 0 3 2 5 4 7 6\n"
           "1 0 3 2 5 4 7 6\n"
           "1 0 3 2 5 4 7 6\n"
           "1 1 3 3 5 5 7 7\n"},
          {"Lstar(7,7,7)",
           "0 1 2 3 4 5 6 7 8\n"
           "0 1 2 3 4 5 6 7 8\n"
           "0 1 2 3 4 5 6 7 8\n"
           "0 1 2 3 4 5 6 7 8\n"
           "0 1 2 3 4 5 6 7 8\n"
           "0 1 2 3 4 5 6 7 8\n"
           "0 0 2 2 4 4 6 6 8\n"
           "1 0 3 2 5 4 7 6 9\n"
           "1 0 3 2 5 4 7 6 9\n"
           "1 0 3 2 5 4 7 6 9\n"
           "1 0 3 2 5 4 7 6 9\n"
           "1 0 3 2 5 4 7 6 9\n"
           "1 0 3 2 5 4 7 6 9\n"
           "1 1 3 3 5 5 7 7 9\n"}}},
        {12,
         {{"V[(0,-3);(-2,0);(-1,3);(-2,2);(-4,1)]",
           "0 0 2 1 1 3 3 1 4 0 0 2 1 3 0 0 2 1 1 2 0 3 1 4 0 0 3 1 2\n"
           "0 0 2 2 1 1 3 0 4 1 1 2 0 0 2 1 3 0 2 1 1 2 0 3 1 1 2 0 0\n"
           "0 0 2 2 0 0 2 1 1 3 0 2 1 4 0 0 2 1 3 0 0 2 1 1 2 0 3 1 2\n"
           "1 1 3 0 0 2 2 0 5 1 1 3 0 2 1 1 3 0 0 3 1 2 0 5 1 1 2 0 3\n"
           "1 1 3 3 0 0 2 1 5 0 0 3 1 1 3 0 2 1 3 0 0 3 1 2 0 0 3 1 1\n"
           "1 1 3 3 1 1 3 0 0 2 1 3 0 5 1 1 3 0 2 1 1 3 0 0 3 1 2 0 3\n"}}},
        {13,
         {{"V[(0,-2);(-1,0);(-3,-2);(-2,2)]",
           "0 1 0 1 0 1 0 1 0 1\n"
           "0 1 0 1 0 1 0 1 0 1\n"
           "1 0 1 2 3 2 3 2 3 2\n"
           "1 0 1 2 3 2 3 2 3 2\n"
           "0 1 0 3 2 0 1 0 1 0\n"
           "0 1 0 3 2 0 1 0 1 0\n"
           "1 0 1 2 3 1 0 1 2 3\n"
           "1 0 1 2 3 1 0 1 2 3\n"
           "0 1 0 3 2 0 1 0 3 2\n"
           "0 1 0 3 2 0 1 0 3 2\n"}}},
        {14,
         {{"V[(0,-3);(-2,0);(-1,3);(-2,2);(-3,1);(-1,-2)]",
           "0 0 2 1 1 3 3 1 1 2 0 0 2 2 1 1 3 0 1 2 0 0 1 2 0 1 2 0 1 1\n"
           "0 0 2 2 0 3 1 1 3 3 4 0 0 2 2 0 1 1 3 0 4 2 0 1 2 0 0 1 2 0\n"
           "0 2 2 0 0 2 2 1 3 3 1 1 2 0 0 2 2 1 1 3 0 1 1 2 0 1 2 0 1 2\n"
           "1 1 3 0 0 2 2 0 0 4 1 1 3 3 0 0 2 2 0 4 1 3 0 1 2 0 1 2 0 0\n"
           "1 1 3 3 1 2 0 0 2 2 5 5 3 1 1 3 0 0 2 2 5 1 2 0 1 1 2 0 1 2\n"
           "1 3 3 1 1 3 3 0 2 2 0 0 5 2 1 1 3 0 0 1 2 0 0 1 2 0 1 2 0 1\n"
           "0 0 2 1 1 3 3 1 1 3 0 0 2 2 4 4 5 1 1 3 0 4 2 0 1 2 0 1 1 2\n"
           "0 0 2 2 0 3 1 1 3 3 4 1 2 0 0 2 2 4 1 1 3 0 1 2 0 0 1 2 0 1\n"
           "0 2 2 0 0 2 2 1 3 3 1 1 3 3 0 0 2 2 4 0 1 1 3 0 4 2 0 1 2 0\n"
           "1 1 3 0 0 2 2 0 0 2 1 1 3 3 1 1 3 0 0 2 2 1 1 3 0 1 2 0 0 1\n"
           "1 1 3 3 1 2 0 0 2 2 5 0 3 1 1 3 3 5 0 0 2 2 0 1 1 3 0 4 2 0\n"
           "1 3 3 1 1 3 3 0 2 2 0 0 2 2 1 3 3 1 1 3 0 0 2 2 1 1 3 0 1 1\n"}}},
    };
    return data;
}

std::vector<std::vector<int>> parse_cells(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::vector<int> row;
        std::istringstream cells(line);
        int v;
        while (cells >> v) row.push_back(v);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

const std::vector<int>& figure_ids() {
    static const std::vector<int> ids = [] {
        std::vector<int> out;
        for (const auto& f : goldens()) out.push_back(f.id);
        return out;
    }();
    return ids;
}

FigureResult reproduce_figure(int id) {
    const GoldenFigure* fig = nullptr;
    for (const auto& f : goldens())
        if (f.id == id) fig = &f;
    if (!fig) throw std::invalid_argument("no table is published under figure id " + std::to_string(id));

    FigureResult result;
    result.id = id;
    result.pass = true;
    for (const GoldenGrid& g : fig->grids) {
        const auto want = parse_cells(g.cells);
        const int H = static_cast<int>(want.size());
        const int W = static_cast<int>(want.front().size());
        GameRules rules = parse_spec(g.spec);
        SgTable table = compute_sg_table(rules, {W, H});
        GridResult gr;
        gr.spec = g.spec;
        gr.width = W;
        gr.height = H;
        gr.pass = true;
        gr.rendered = render_table(table, RenderFormat::Ascii);
        for (int y = 0; y < H && gr.pass; ++y) {
            for (int x = 0; x < W; ++x) {
                if (table.value(x, y) != want[y][x]) {
                    gr.pass = false;
                    gr.first_diff = CellDiff{x, y, table.value(x, y), want[y][x]};
                    break;
                }
            }
        }
        result.pass = result.pass && gr.pass;
        result.grids.push_back(std::move(gr));
    }
    return result;
}

}  // namespace grundy
