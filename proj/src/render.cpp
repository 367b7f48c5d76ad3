#include "grundy/render.hpp"

#include "json.hpp"

namespace grundy {

std::string render_table(const SgTable& table, RenderFormat format) {
    if (table.dim() != 2 && table.dim() != 1)
        throw std::invalid_argument("rendering needs a 1-D or 2-D table");
    const int W = table.shape()[0];
    const int H = table.dim() == 2 ? table.height() : 1;
    const auto cell = [&](int x, int y) {
        if (table.dim() == 1) {
            const int pos[] = {x};
            return table.value(pos);
        }
        return table.value(x, y);
    };

    if (format == RenderFormat::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (int y = 0; y < H; ++y) {
            nlohmann::json row = nlohmann::json::array();
            for (int x = 0; x < W; ++x) row.push_back(cell(x, y));
            rows.push_back(std::move(row));
        }
        nlohmann::json out{{"spec", table.rules().label}, {"width", W}, {"height", H}, {"rows", rows}};
        return out.dump();
    }

    const char sep = format == RenderFormat::Csv ? ',' : ' ';
    std::string out;
    out.reserve(static_cast<size_t>(W) * H * 2);
    for (int y = 0; y < H; ++y) {
        for (int x = 0; x < W; ++x) {
            if (x) out += sep;
            out += std::to_string(cell(x, y));
        }
        out += '\n';
    }
    return out;
}

}  // namespace grundy
