#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "embrank/bignat.hpp"
#include "embrank/graph.hpp"

namespace embrank {

struct CutvertexTuple {
  std::vector<std::size_t> c;  // one per block, c_j < delta_{v,j}
  std::vector<std::size_t> d;  // b(v) - 2 entries, d_j < delta_v - j

  friend bool operator==(const CutvertexTuple&, const CutvertexTuple&) = default;
};

// Number of planar arrangements of blocks with the given degrees at a common vertex.
BigNat arrangement_count(std::span<const std::size_t> block_degrees);

// Bijection between the arrangements of the blocks around one cut vertex and
// its tuples, for fixed block embeddings.
class CutvertexRanker {
 public:
  // block_neighbors[j]: neighbors of v inside one block. Blocks are reindexed
  // by ascending minimum neighbor.
  CutvertexRanker(Vertex v, std::vector<std::vector<Vertex>> block_neighbors);

  Vertex vertex() const { return v_; }
  std::size_t num_blocks() const { return nbr_.size(); }
  std::size_t degree() const { return block_.size(); }
  // Neighbors of v in block j (0-based), ascending.
  const std::vector<Vertex>& block_neighbors(std::size_t j) const { return nbr_[j]; }
  std::size_t block_of(Vertex w) const;

  // c bounds then d bounds.
  std::vector<BigNat> bounds() const;
  BigNat count() const;

  std::vector<BigNat> flatten(const CutvertexTuple& t) const;
  CutvertexTuple unflatten(std::span<const BigNat> values) const;

  // block_ccw[j]: counter-clockwise order of block j's edges at v. Returns the
  // counter-clockwise order of all neighbors of v, starting at first_1.
  std::vector<Vertex> unrank(const CutvertexTuple& t, const std::vector<std::vector<Vertex>>& block_ccw) const;
  // Throws EmbeddingMismatch when the rotation interleaves blocks.
  CutvertexTuple rank(std::span<const Vertex> ccw) const;

 private:
  std::size_t edge_of(Vertex w) const;  // index in [0, degree)

  Vertex v_;
  std::vector<std::vector<Vertex>> nbr_;
  std::vector<std::size_t> offset_;
  // all neighbors sorted, with their edge index
  std::vector<std::pair<Vertex, std::size_t>> lookup_;
  std::vector<std::size_t> block_;  // block of each edge index
  std::vector<Vertex> neighbor_;  // neighbor of each edge index
};

}  // namespace embrank
