#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "embrank/bignat.hpp"
#include "embrank/embedding.hpp"
#include "embrank/nesting_tree.hpp"

namespace embrank {

// Face of component h (identifier order) addressed by an inner-face label,
// given the component's outer face.
std::size_t inner_face(const FaceIntervals& intervals, std::size_t h, std::size_t outer, std::size_t label);
// Inverse of inner_face; face must differ from outer.
std::size_t inner_label(const FaceIntervals& intervals, std::size_t h, std::size_t outer, std::size_t face);

// c - 1 labels: repeatedly remove the leaf component with the smallest id.
std::vector<std::size_t> nesting_encode(const NestingTree& tree);
// Throws LabelOutOfRange.
NestingTree nesting_decode(std::span<const std::size_t> tau, const FaceIntervals& intervals);

struct NestingPlacement {
  NestingTree tree;
  std::vector<std::size_t> face_tuple;

  friend bool operator==(const NestingPlacement&, const NestingPlacement&) = default;
};

NestingPlacement digamma(const PlanarEmbedding& emb);
PlanarEmbedding digamma_inverse(const NestingPlacement& placement, std::shared_ptr<const Graph> graph, RotationSystem rotation);

// The a and b segments: c - 1 nesting labels, then one outer face per component.
class NestingRanker {
 public:
  explicit NestingRanker(std::vector<std::size_t> face_counts);

  const FaceIntervals& intervals() const { return intervals_; }
  std::vector<BigNat> bounds() const;
  BigNat count() const;

  std::vector<BigNat> rank(const NestingPlacement& placement) const;
  NestingPlacement unrank(std::span<const BigNat> values) const;

 private:
  FaceIntervals intervals_;
};

}  // namespace embrank
