#pragma once

#include <string>

#include "grundy/table.hpp"

namespace grundy {

enum class RenderFormat { Ascii, Csv, Json };

// Rows are y ascending downward, columns x ascending rightward, origin at the
// top left, matching the published tables.
std::string render_table(const SgTable& table, RenderFormat format);

}  // namespace grundy
