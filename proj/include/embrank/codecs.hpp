#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "embrank/bignat.hpp"
#include "embrank/graph.hpp"
#include "embrank/nesting_tree.hpp"

namespace embrank {

// Mixed-radix bijection between tuples with 0 <= b_i < B_i and [0, prod B_i).
// The first element is the most significant digit.
BigNat tuple_rank(std::span<const BigNat> values, std::span<const BigNat> bounds);
std::vector<BigNat> tuple_unrank(const BigNat& rank, std::span<const BigNat> bounds);
BigNat bounds_product(std::span<const BigNat> bounds);

// Linear-time permutation ranking of Myrvold and Ruskey, shifted so the
// identity has rank 0. sigma is a permutation of 0..k-1.
BigNat perm_rank(std::span<const std::size_t> sigma);
std::vector<std::size_t> perm_unrank(const BigNat& rank, std::size_t k);

// Unshifted variants, exposed for tests.
BigNat perm_rank_raw(std::span<const std::size_t> sigma);
std::vector<std::size_t> perm_unrank_raw(const BigNat& rank, std::size_t k);

// Labeled tree on 1..n with a designated root.
struct RootedTree {
  std::size_t n = 0;
  Vertex root = 0;
  std::vector<EdgeId> edges;  // kept sorted
};

// n-2 Pruefer labels followed by the root label.
std::vector<Vertex> prufer_rank(const RootedTree& tree);
RootedTree prufer_unrank(std::span<const Vertex> sequence);

struct NestingPreprocess {
  std::vector<std::size_t> parents;  // tau'
  std::vector<std::size_t> degrees;  // index 0 is the dummy root
};

NestingPreprocess nesting_tuple_preprocess(std::span<const std::size_t> tau, const FaceIntervals& intervals);

}  // namespace embrank
