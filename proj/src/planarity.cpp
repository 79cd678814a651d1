#include "embrank/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace embrank {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

}  // namespace

std::optional<std::vector<std::vector<std::uint32_t>>> planar_rotation(std::size_t n, std::span<const LocalEdge> edges) {
  BoostGraph g(n);
  int k = 0;
  for (auto [a, b] : edges) {
    auto e = boost::add_edge(a, b, g).first;
    boost::put(boost::edge_index, g, e, k++);
  }
  std::vector<std::vector<BoostEdge>> emb(n);
  bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                                    boost::boyer_myrvold_params::embedding = emb.data());
  if (!planar) return std::nullopt;
  std::vector<std::vector<std::uint32_t>> rot(n);
  for (std::size_t v = 0; v < n; ++v) {
    rot[v].reserve(emb[v].size());
    for (auto e : emb[v]) {
      auto s = boost::source(e, g), t = boost::target(e, g);
      rot[v].push_back(static_cast<std::uint32_t>(s == v ? t : s));
    }
  }
  return rot;
}

bool is_planar(const Graph& g) {
  std::size_t n = g.num_vertices();
  BoostGraph bg(n);
  for (auto e : g.edges()) boost::add_edge(e.lo - 1, e.hi - 1, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace embrank
