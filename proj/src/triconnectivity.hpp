#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace embrank::detail {

enum class CompType { Bond, Polygon, Triconnected };

struct SplitComponent {
  CompType type;
  std::vector<int> edges;
};

// Triconnected components of a biconnected simple graph on 0..n-1 (n >= 3).
// Edge ids below edges.size() are the input edges; larger ids are virtual.
struct TriconnectedComponents {
  std::vector<std::pair<int, int>> ends;
  std::size_t num_real = 0;
  std::vector<SplitComponent> components;
};

TriconnectedComponents triconnected_components(int n, const std::vector<std::pair<int, int>>& edges);

// Runs fn on a thread with a large stack; deep recursion in the DFS passes
// would overflow the default stack on long paths.
void run_with_large_stack(const std::function<void()>& fn);

}  // namespace embrank::detail
