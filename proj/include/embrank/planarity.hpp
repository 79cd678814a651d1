#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "embrank/graph.hpp"

namespace embrank {

using LocalEdge = std::pair<std::uint32_t, std::uint32_t>;

// Neighbor lists of some planar rotation system of the simple graph on
// vertices 0..n-1, or nullopt when the graph is not planar.
std::optional<std::vector<std::vector<std::uint32_t>>> planar_rotation(std::size_t n, std::span<const LocalEdge> edges);

bool is_planar(const Graph& g);

}  // namespace embrank
