#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "embrank/embedding.hpp"
#include "embrank/graph.hpp"

namespace embrank {

enum class SpqrKind { S, P, Q, R };

struct SkeletonEdge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  bool is_virtual = false;
  int twin_node = -1;
  int twin_edge = -1;
};

// S, P and R nodes are stored explicitly. Q-nodes are implicit: every real
// skeleton edge stands for the Q-node of that edge.
struct SpqrNode {
  SpqrKind kind = SpqrKind::S;
  std::vector<SkeletonEdge> edges;
  std::vector<Vertex> vertices;  // ascending
  std::vector<std::vector<int>> incident;  // skeleton edges at vertices[i]
  int parent = -1;
  int reference = -1;  // skeleton edge towards the parent (the root's reference edge is real)
  int depth = 1;  // the root Q-node has depth 0
  EdgeId min_edge;  // minimum real edge below the node
  std::vector<int> children;
  // R-nodes only: counter-clockwise skeleton edge order at each vertex in the
  // first embedding.
  std::vector<std::vector<int>> first_rotation;

  std::size_t local(Vertex x) const { return local_index(vertices, x); }
};

struct SpqrTree {
  std::vector<Vertex> vertices;  // of the biconnected graph, ascending
  std::vector<EdgeId> edges;  // ascending
  std::vector<SpqrNode> nodes;  // empty for a single edge
  int root = -1;
  EdgeId reference_edge;  // minimum edge; its Q-node is the root

  // One line per node: "kind depth min-edge [skeleton edges]", virtual edges starred.
  std::string dump() const;
};

// The edges must form a biconnected simple planar graph (a single edge is allowed).
SpqrTree build_spqr(std::span<const EdgeId> edges);
SpqrTree build_spqr(const Graph& g);

struct ConventionalOrder {
  std::vector<int> p_nodes;
  std::vector<int> r_nodes;
};

// Nodes sorted by (depth, minimum pertinent edge).
ConventionalOrder conventional_order(const SpqrTree& t);

// For P-nodes: the skeleton edges clockwise around the smaller pole, starting
// with the reference edge. For R-nodes: the flip bit.
struct SkeletonEmbedding {
  int node = -1;
  std::vector<int> order;
  int flip = 0;
};

SkeletonEmbedding first_embedding_R(const SpqrTree& t, int node);
SkeletonEmbedding first_embedding_P(const SpqrTree& t, int node);
// Non-reference skeleton edges of a P-node in first-embedding order.
std::vector<int> p_branches(const SpqrTree& t, int node);

// Counter-clockwise skeleton edge order at every vertex of the node's skeleton
// under the given choice.
std::vector<std::vector<int>> skeleton_rotation(const SpqrTree& t, const SkeletonEmbedding& choice);

SubRotation compose_embedding(const SpqrTree& t, std::span<const SkeletonEmbedding> choices);

}  // namespace embrank
