#pragma once

#include <cstdint>
#include <limits>

namespace gcol {

using vertex_t = std::uint32_t;
using color_t = std::int32_t;

// Sentinel color for vertices that have not been assigned yet.
inline constexpr color_t kUncolored = -1;

// Sentinel vertex id, used where a partner vertex does not exist.
inline constexpr vertex_t kNoVertex = std::numeric_limits<vertex_t>::max();

}  // namespace gcol
