#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace embrank {

using Vertex = std::uint32_t;

// Undirected edge identifier: endpoints in ascending order, compared lexicographically.
struct EdgeId {
  Vertex lo = 0;
  Vertex hi = 0;

  friend constexpr auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

EdgeId make_edge(Vertex a, Vertex b);

// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  // Throws MalformedInput on self-loops, parallel edges or endpoints outside 1..n.
  Graph(std::size_t n, std::vector<EdgeId> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<EdgeId>& edges() const { return edges_; }

  // Neighbors in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return offset_[v + 1] - offset_[v]; }
  bool has_edge(Vertex a, Vertex b) const;
  // Position of the edge in edges(); throws IndexOutOfRange when absent.
  std::size_t edge_index(EdgeId e) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<EdgeId> edges_;
  std::vector<std::size_t> offset_;
  std::vector<Vertex> adj_;
};

struct Component {
  std::size_t id = 0;  // 1-based
  std::vector<Vertex> vertices;  // ascending
  std::vector<EdgeId> edges;  // ascending
};

// Components ordered by their minimum vertex id.
std::vector<Component> connected_components(const Graph& g);

struct Block {
  std::vector<Vertex> vertices;  // ascending
  std::vector<EdgeId> edges;  // ascending
};

struct BlockCutTree {
  std::vector<Block> blocks;  // ordered by minimum EdgeId
  std::vector<Vertex> cut_vertices;  // ascending
  // arcs[i] lists the blocks containing cut_vertices[i], ascending by block index.
  std::vector<std::vector<std::size_t>> arcs;
};

// Blocks and cut vertices of every component (no connectivity requirement).
BlockCutTree biconnected_decomposition(const Graph& g);
// Same as above but requires a connected graph (throws NotConnected).
BlockCutTree block_cut_tree(const Graph& g);

// Every edge-induced subgraph lists its vertices; this maps a vertex to its position.
std::size_t local_index(std::span<const Vertex> sorted_vertices, Vertex v);

}  // namespace embrank
