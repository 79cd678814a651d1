#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "embrank/embedding.hpp"
#include "embrank/graph.hpp"

// Brute-force ground truth, independent of the ranking code paths. Every
// enumerator throws TooLarge instead of truncating.
namespace embrank::oracle {

struct Limits {
  std::size_t max_vertices = 8;
  std::size_t max_candidates = 20'000'000;
};

// Distinct rotation systems of a connected graph that satisfy Euler's
// formula, canonicalized.
std::vector<RotationSystem> enumerate_connected(const Graph& g, const Limits& limits = {});

// Canonical keys (see canonical_key) of all embeddings of g: per-component
// rotations x nesting trees x face tuples.
std::set<std::string> enumerate_embeddings(const Graph& g, const Limits& limits = {});

// All cyclic orders around one vertex that keep each block's cyclic order
// and give a planar combined embedding. block_ccw[j] is block j's
// counter-clockwise neighbor order. Orders are rotated to start at their
// smallest neighbor.
std::set<std::vector<Vertex>> enumerate_arrangements(const std::vector<std::vector<Vertex>>& block_ccw,
                                                     std::size_t max_degree = 9);

// Every nesting tree on components with the given face counts (brute force
// over parent choices with a cycle check).
std::vector<NestingTree> enumerate_nesting_trees(const std::vector<std::size_t>& face_counts);

}  // namespace embrank::oracle
