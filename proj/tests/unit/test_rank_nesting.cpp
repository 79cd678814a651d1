#include <random>
#include <set>

#include "doctest.h"
#include "embrank/codecs.hpp"
#include "embrank/error.hpp"
#include "embrank/oracle.hpp"
#include "embrank/rank_nesting.hpp"
#include "generators.hpp"

using namespace embrank;

namespace {

NestingTree reference_tree() {
  // root -> G1, G4; G1 -> G3 (3); G4 -> G2 (10), G5 (13)
  NestingTree t;
  t.links = {{0, 0}, {4, 10}, {1, 3}, {0, 0}, {4, 13}};
  return t;
}

}  // namespace

TEST_CASE("nesting decode of the reference tuple") {
  FaceIntervals iv({4, 3, 5, 5, 3});
  std::vector<std::size_t> tau{10, 3, 0, 13};
  CHECK(nesting_decode(tau, iv) == reference_tree());
  CHECK(nesting_encode(reference_tree()) == tau);
}

TEST_CASE("nesting codec small cases") {
  FaceIntervals iv({2, 2, 2});
  std::vector<std::size_t> zeros{0, 0};
  NestingTree star;
  star.links.assign(3, {0, 0});
  CHECK(nesting_decode(zeros, iv) == star);
  CHECK(nesting_encode(star) == zeros);

  FaceIntervals two({3, 2});
  NestingTree nested;
  nested.links = {{0, 0}, {1, 2}};
  CHECK(nesting_encode(nested) == std::vector<std::size_t>{2});
  std::vector<std::size_t> one{2};
  CHECK(nesting_decode(one, two) == nested);

  NestingTree single;
  single.links = {{0, 0}};
  CHECK(nesting_encode(single).empty());
  std::vector<std::size_t> bad{4};
  CHECK_THROWS_AS(nesting_decode(bad, two), Error);
}

TEST_CASE("nesting codec is a bijection for four components with two faces each") {
  FaceIntervals iv({2, 2, 2, 2});
  auto trees = oracle::enumerate_nesting_trees({2, 2, 2, 2});
  std::set<std::vector<NestingLink>> expected;
  for (const auto& t : trees) expected.insert(t.links);
  CHECK(expected.size() == 125);
  std::set<std::vector<NestingLink>> got;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b)
      for (std::size_t c = 0; c < 5; ++c) {
        std::vector<std::size_t> tau{a, b, c};
        auto t = nesting_decode(tau, iv);
        CHECK(nesting_encode(t) == tau);
        got.insert(t.links);
      }
  CHECK(got == expected);
}

TEST_CASE("nesting code maps to the classic rooted Pruefer code") {
  std::mt19937_64 rng(51);
  for (int it = 0; it < 300; ++it) {
    std::size_t c = 2 + rng() % 6;
    std::vector<std::size_t> counts;
    for (std::size_t i = 0; i < c; ++i) counts.push_back(1 + rng() % 4);
    FaceIntervals iv(counts);
    std::vector<std::size_t> tau;
    for (std::size_t i = 0; i + 1 < c; ++i) tau.push_back(rng() % (iv.total_inner() + 1));
    auto tree = nesting_decode(tau, iv);
    // the root becomes node c + 1, the largest label
    RootedTree rt;
    rt.n = c + 1;
    rt.root = static_cast<Vertex>(c + 1);
    for (std::size_t h = 1; h <= c; ++h) {
      std::size_t p = tree.of(h).parent;
      rt.edges.push_back(make_edge(static_cast<Vertex>(h), static_cast<Vertex>(p == 0 ? c + 1 : p)));
    }
    std::sort(rt.edges.begin(), rt.edges.end());
    std::vector<Vertex> mapped;
    for (auto label : nesting_encode(tree)) {
      std::size_t owner = iv.owner(label);
      mapped.push_back(static_cast<Vertex>(owner == 0 ? c + 1 : owner));
    }
    mapped.push_back(static_cast<Vertex>(c + 1));
    CHECK(prufer_rank(rt) == mapped);
  }
}

TEST_CASE("inner face labels skip the outer face") {
  FaceIntervals iv({4, 3});
  // component 2 owns labels 4 and 5; with outer face 1 they address faces 0 and 2
  CHECK(inner_face(iv, 2, 1, 4) == 0);
  CHECK(inner_face(iv, 2, 1, 5) == 2);
  CHECK(inner_label(iv, 2, 1, 2) == 5);
  for (std::size_t outer = 0; outer < 4; ++outer)
    for (std::size_t label = 1; label <= 3; ++label) {
      auto f = inner_face(iv, 1, outer, label);
      CHECK(f != outer);
      CHECK(inner_label(iv, 1, outer, f) == label);
    }
  CHECK_THROWS_AS(inner_face(iv, 1, 0, 4), Error);
  CHECK_THROWS_AS(inner_label(iv, 1, 2, 2), Error);
}

TEST_CASE("nesting ranker bounds and counts") {
  NestingRanker one({2});
  CHECK(one.bounds() == std::vector<BigNat>{2});
  NestingRanker two_edges({1, 1});
  CHECK(two_edges.count() == 1);
  NestingRanker two_triangles({2, 2});
  CHECK(two_triangles.bounds() == std::vector<BigNat>{3, 2, 2});
  CHECK(two_triangles.count() == 12);
  NestingRanker triangle_edge({2, 1});
  CHECK(triangle_edge.count() == 4);
  NestingRanker reference({4, 3, 5, 5, 3});
  CHECK(reference.bounds().front() == 16);
}

TEST_CASE("nesting ranker roundtrip and oracle agreement") {
  for (auto counts : std::vector<std::vector<std::size_t>>{{2, 2}, {3, 1, 2}, {2, 2, 2}, {1, 1, 1, 1}, {3, 3}, {2, 1, 3, 1}}) {
    NestingRanker nr(counts);
    auto bounds = nr.bounds();
    std::set<std::pair<std::vector<NestingLink>, std::vector<std::size_t>>> got;
    for (BigNat r = 0; r < nr.count(); ++r) {
      auto vals = tuple_unrank(r, bounds);
      auto p = nr.unrank(vals);
      CHECK(nr.rank(p) == vals);
      got.insert({p.tree.links, p.face_tuple});
    }
    std::size_t ft = 1;
    for (auto f : counts) ft *= f;
    CHECK(got.size() == oracle::enumerate_nesting_trees(counts).size() * ft);
  }
}

TEST_CASE("digamma reads the placement and checks it") {
  auto g = std::make_shared<const Graph>(testing::disjoint_union(testing::cycle_graph(3), testing::cycle_graph(3)));
  RotationSystem rot(6);
  rot.set(1, {2, 3});
  rot.set(2, {3, 1});
  rot.set(3, {1, 2});
  rot.set(4, {5, 6});
  rot.set(5, {6, 4});
  rot.set(6, {4, 5});
  NestingPlacement p;
  p.tree.links = {{0, 0}, {1, 1}};
  p.face_tuple = {1, 0};
  auto emb = digamma_inverse(p, g, rot);
  CHECK(validate(emb).empty());
  CHECK(digamma(emb) == p);
  p.tree.links[1] = {1, 2};
  CHECK_THROWS_AS(digamma_inverse(p, g, rot), Error);
}
