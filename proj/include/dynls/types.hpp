#pragma once

#include <cstdint>

namespace dynls {

// Dense 0-based vertex identifier.
using Vertex = std::uint32_t;

// Vertex weights and solution weights. 64 bits so sums never overflow on
// realistic instances.
using Weight = std::int64_t;

}  // namespace dynls
