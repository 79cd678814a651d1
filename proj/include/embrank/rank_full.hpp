#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "embrank/bignat.hpp"
#include "embrank/embedding.hpp"
#include "embrank/graph.hpp"
#include "embrank/rank_biconnected.hpp"
#include "embrank/rank_cutvertex.hpp"
#include "embrank/rank_nesting.hpp"

namespace embrank {

// A run of tuple positions sharing one meaning: 'a' nesting labels, 'b' outer
// faces, 'c'/'d' cut vertex choices, 'p' P-node permutations, 'r' R-node flips.
struct TupleSegment {
  char kind = 'a';
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Ranks the embeddings on the sphere of a planar graph without isolated vertices.
class EmbeddingRanker {
 public:
  // Throws NotPlanar or EdgelessComponent.
  explicit EmbeddingRanker(std::shared_ptr<const Graph> graph);
  explicit EmbeddingRanker(Graph graph) : EmbeddingRanker(std::make_shared<const Graph>(std::move(graph))) {}

  const std::shared_ptr<const Graph>& graph() const { return graph_; }
  const BlockCutTree& decomposition() const { return bct_; }
  const std::vector<BlockRanker>& block_rankers() const { return blocks_; }
  const std::vector<CutvertexRanker>& cutvertex_rankers() const { return cuts_; }

  const std::vector<BigNat>& bounds() const { return bounds_; }
  const std::vector<TupleSegment>& segments() const { return segments_; }
  BigNat count() const;

  std::vector<BigNat> phi(const PlanarEmbedding& emb) const;
  PlanarEmbedding phi_inverse(std::span<const BigNat> values) const;
  BigNat rank(const PlanarEmbedding& emb) const;
  PlanarEmbedding unrank(const BigNat& rank) const;
  PlanarEmbedding sample(std::mt19937_64& rng) const;

  // Calls emit for the ranks from, from+1, ... (at most limit of them, stopping
  // early when emit returns false). Throws RankOutOfRange when from >= count.
  void enumerate(const BigNat& from, std::size_t limit,
                 const std::function<bool(const BigNat&, const PlanarEmbedding&)>& emit) const;

 private:
  std::size_t edge_block(Vertex a, Vertex b) const { return edge_block_[graph_->edge_index(make_edge(a, b))]; }
  std::vector<SubRotation> restrict_to_blocks(const RotationSystem& rot) const;

  std::shared_ptr<const Graph> graph_;
  BlockCutTree bct_;
  std::vector<std::size_t> edge_block_;
  std::vector<BlockRanker> blocks_;
  std::vector<CutvertexRanker> cuts_;
  std::vector<std::vector<std::size_t>> cut_blocks_;  // global block of each ranker-local block
  NestingRanker nesting_;
  std::vector<BigNat> bounds_;
  std::vector<TupleSegment> segments_;
};

BigNat count_embeddings(const Graph& g);

}  // namespace embrank
