#include <random>

#include "doctest.h"
#include "embrank/error.hpp"
#include "embrank/graph.hpp"
#include "embrank/union_find.hpp"
#include "generators.hpp"

using namespace embrank;

TEST_CASE("graph rejects malformed edge lists") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), Error);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {1, 2}}), Error);
  try {
    Graph(3, {{0, 2}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedInput);
  }
}

TEST_CASE("graph adjacency is sorted and edges are normalized") {
  Graph g(4, {make_edge(3, 1), make_edge(2, 1), make_edge(4, 3)});
  auto nb = g.neighbors(1);
  REQUIRE(nb.size() == 2);
  CHECK(nb[0] == 2);
  CHECK(nb[1] == 3);
  CHECK(g.edges().front() == EdgeId{1, 2});
  CHECK(g.has_edge(4, 3));
  CHECK_FALSE(g.has_edge(1, 4));
  CHECK(g.edge_index(EdgeId{3, 4}) == 2);
  CHECK_THROWS_AS(g.edge_index(EdgeId{1, 4}), Error);
}

TEST_CASE("connected components are ordered by minimum vertex") {
  Graph g(6, {{4, 5}, {1, 6}, {2, 3}});
  auto cs = connected_components(g);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].vertices == std::vector<Vertex>{1, 6});
  CHECK(cs[1].vertices == std::vector<Vertex>{2, 3});
  CHECK(cs[2].vertices == std::vector<Vertex>{4, 5});
  CHECK(cs[2].id == 3);
}

TEST_CASE("block-cut tree of a bowtie") {
  auto g = testing::curated("bowtie");
  auto bct = block_cut_tree(g);
  REQUIRE(bct.blocks.size() == 2);
  CHECK(bct.cut_vertices == std::vector<Vertex>{3});
  CHECK(bct.blocks[0].edges.front() == EdgeId{1, 2});
  CHECK(bct.arcs[0] == std::vector<std::size_t>{0, 1});
}

TEST_CASE("block-cut tree requires a connected graph") {
  auto g = testing::disjoint_union(testing::path_graph(2), testing::path_graph(2));
  CHECK_THROWS_AS(block_cut_tree(g), Error);
  CHECK(biconnected_decomposition(g).blocks.size() == 2);
}

TEST_CASE("tree blocks are single edges and internal vertices are cut vertices") {
  auto bct = block_cut_tree(testing::path_graph(5));
  CHECK(bct.blocks.size() == 4);
  CHECK(bct.cut_vertices == std::vector<Vertex>{2, 3, 4});
  auto star = block_cut_tree(testing::star_graph(4));
  CHECK(star.cut_vertices == std::vector<Vertex>{1});
  CHECK(star.arcs[0].size() == 4);
}

TEST_CASE("blocks partition the edges and cut vertices lie in several blocks") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    auto g = testing::random_planar_graph(2 + rng() % 9, rng() % 20, rng);
    auto bct = biconnected_decomposition(g);
    std::size_t m = 0;
    std::vector<std::size_t> count(g.num_vertices() + 1, 0);
    for (const auto& b : bct.blocks) {
      m += b.edges.size();
      for (auto v : b.vertices) ++count[v];
      // a block with 2+ edges has no vertex of degree 1 inside it
      if (b.edges.size() > 1) {
        for (auto v : b.vertices) {
          std::size_t d = 0;
          for (const auto& e : b.edges) d += (e.lo == v) + (e.hi == v);
          CHECK(d >= 2);
        }
      }
    }
    CHECK(m == g.num_edges());
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
      bool is_cut = std::binary_search(bct.cut_vertices.begin(), bct.cut_vertices.end(), v);
      CHECK(is_cut == (count[v] > 1));
    }
  }
}

TEST_CASE("union-find merges classes") {
  UnionFind uf(6);
  uf.unite(0, 1);
  uf.unite(2, 3);
  uf.unite(1, 3);
  CHECK(uf.find(0) == uf.find(2));
  CHECK(uf.find(4) != uf.find(0));
  CHECK(uf.find(5) == 5);
  CHECK_THROWS_AS(uf.find(6), Error);
}
