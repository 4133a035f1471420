#pragma once

#include <span>
#include <string_view>

namespace hsc::cli {

struct TableInput {
  long d;
  std::string_view x;
};

// (d, x) inputs of the published low-degree table; values are always recomputed.
std::span<const TableInput> published_rows();

}  // namespace hsc::cli
