#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "embrank/graph.hpp"
#include "embrank/nesting_tree.hpp"

namespace embrank {

// Counter-clockwise circular neighbor lists for vertices 1..n.
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::size_t n) : ccw_(n + 1) {}

  std::size_t num_vertices() const { return ccw_.empty() ? 0 : ccw_.size() - 1; }
  std::span<const Vertex> around(Vertex v) const { return ccw_[v]; }
  std::vector<Vertex>& list(Vertex v) { return ccw_[v]; }
  void set(Vertex v, std::vector<Vertex> ccw) { ccw_[v] = std::move(ccw); }

  // Rotates every list so that its smallest neighbor comes first.
  void canonicalize();
  RotationSystem mirrored() const;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;

 private:
  std::vector<std::vector<Vertex>> ccw_;
};

struct Dart {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct FaceLabel {
  std::size_t component = 0;
  EdgeId edge;
  int side = 0;
  friend auto operator<=>(const FaceLabel&, const FaceLabel&) = default;
};

// Face of one connected component: a single closed walk keeping the face on its left.
struct TracedFace {
  FaceLabel label;
  std::vector<Dart> boundary;
};

// A face of a whole (possibly disconnected) embedding: one closed walk per
// component touching it.
struct Face {
  std::vector<std::vector<Dart>> boundary;
};

struct FaceTrace {
  // Faces of component i+1 sorted by label; the position is the face identifier.
  std::vector<std::vector<TracedFace>> per_component;
};

// Requires a well-formed rotation (see rotation_diagnostics).
FaceTrace trace_faces(const Graph& g, const RotationSystem& rot);

// Index of a dart inside the rotation at its tail, used by face walks.
class RotationIndex {
 public:
  RotationIndex(const Graph& g, const RotationSystem& rot);
  // Position of w in the list of v.
  std::size_t position(Vertex v, Vertex w) const;

 private:
  const Graph* g_;
  std::vector<std::size_t> offset_;
  std::vector<std::uint32_t> pos_;
};

// Rotation of an edge-induced subgraph (for instance one block); ccw[i] is the
// counter-clockwise neighbor list of vertices[i].
struct SubRotation {
  std::vector<Vertex> vertices;  // ascending
  std::vector<std::vector<Vertex>> ccw;

  std::span<const Vertex> around(Vertex v) const { return ccw[local_index(vertices, v)]; }
  friend bool operator==(const SubRotation&, const SubRotation&) = default;
};

struct PlanarEmbedding {
  std::shared_ptr<const Graph> graph;
  RotationSystem rotation;
  NestingTree nesting;
  std::vector<std::size_t> face_tuple;
};

// F_i = m_i - n_i + 2 for every component, in component order.
std::vector<std::size_t> face_counts(const Graph& g);

std::vector<std::string> rotation_diagnostics(const Graph& g, const RotationSystem& rot);
// Empty when emb is a valid embedding of its graph.
std::vector<std::string> validate(const PlanarEmbedding& emb);

std::vector<TracedFace> face_identifiers(const PlanarEmbedding& emb, std::size_t component);

struct PlaneEmbedding {
  const PlanarEmbedding* sphere = nullptr;
  std::size_t component = 0;
  std::size_t outer_face = 0;
};

PlaneEmbedding project_to_plane(const PlanarEmbedding& emb, std::size_t component, std::size_t outer_face);

// Throws GraphMismatch when the embeddings belong to different graphs.
bool embeddings_equal(const PlanarEmbedding& a, const PlanarEmbedding& b);

// Injective text form used for set comparisons.
std::string canonical_key(const RotationSystem& rot, const NestingTree& tree, std::span<const std::size_t> face_tuple);
std::string canonical_key(const PlanarEmbedding& emb);

}  // namespace embrank
