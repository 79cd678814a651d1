#pragma once

#include <span>
#include <vector>

#include "embrank/bignat.hpp"
#include "embrank/embedding.hpp"
#include "embrank/spqr.hpp"

namespace embrank {

// p values for the P-nodes, then r bits for the R-nodes, both in conventional order.
struct BiconnRankTuple {
  std::vector<BigNat> p;
  std::vector<int> r;

  friend bool operator==(const BiconnRankTuple&, const BiconnRankTuple&) = default;
};

// Bijection between the embeddings of one biconnected planar graph and its
// rank tuples. A single edge has exactly one embedding and an empty tuple.
class BlockRanker {
 public:
  explicit BlockRanker(std::span<const EdgeId> edges);

  const SpqrTree& tree() const { return tree_; }
  const ConventionalOrder& order() const { return order_; }
  // (delta - 1)! per P-node followed by 2 per R-node.
  std::vector<BigNat> bounds() const;
  BigNat count() const;

  BiconnRankTuple chi(const SubRotation& rotation) const;
  SubRotation chi_inverse(const BiconnRankTuple& tuple) const;

  // Flat view: p values then r values as one list.
  std::vector<BigNat> flatten(const BiconnRankTuple& tuple) const;
  BiconnRankTuple unflatten(std::span<const BigNat> values) const;

 private:
  SpqrTree tree_;
  ConventionalOrder order_;
  std::vector<std::vector<int>> branches_;  // per P-node in conventional order
};

}  // namespace embrank
