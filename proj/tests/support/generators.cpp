#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "embrank/planarity.hpp"
#include "embrank/union_find.hpp"

namespace embrank::testing {

Graph path_graph(std::size_t n) {
  std::vector<EdgeId> e;
  for (Vertex v = 1; v < n; ++v) e.push_back({v, v + 1});
  return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<EdgeId> e;
  for (Vertex v = 1; v < n; ++v) e.push_back({v, v + 1});
  e.push_back({1, static_cast<Vertex>(n)});
  return Graph(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<EdgeId> e;
  for (Vertex v = 2; v <= leaves + 1; ++v) e.push_back({1, v});
  return Graph(leaves + 1, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<EdgeId> e;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) e.push_back({a, b});
  return Graph(n, e);
}

Graph theta_graph(std::vector<std::size_t> path_lengths) {
  std::vector<EdgeId> e;
  Vertex next = 3;
  for (auto len : path_lengths) {
    Vertex prev = 1;
    for (std::size_t i = 1; i < len; ++i) {
      e.push_back(make_edge(prev, next));
      prev = next++;
    }
    e.push_back(make_edge(prev, 2));
  }
  return Graph(next - 1, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<EdgeId> e = a.edges();
  Vertex shift = static_cast<Vertex>(a.num_vertices());
  for (auto x : b.edges()) e.push_back({x.lo + shift, x.hi + shift});
  return Graph(a.num_vertices() + b.num_vertices(), e);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<EdgeId> e;
  for (auto x : g.edges()) e.push_back(make_edge(perm[x.lo - 1], perm[x.hi - 1]));
  return Graph(g.num_vertices(), e);
}

namespace {

Graph from_pairs(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<EdgeId> e;
  for (auto [a, b] : pairs) e.push_back(make_edge(a, b));
  return Graph(n, e);
}

}  // namespace

std::vector<NamedGraph> curated_graphs() {
  std::vector<NamedGraph> out;
  out.push_back({"edge", path_graph(2)});
  out.push_back({"path3", path_graph(3)});
  out.push_back({"path5", path_graph(5)});
  out.push_back({"triangle", cycle_graph(3)});
  out.push_back({"square", cycle_graph(4)});
  out.push_back({"hexagon", cycle_graph(6)});
  out.push_back({"star3", star_graph(3)});
  out.push_back({"star4", star_graph(4)});
  out.push_back({"star5", star_graph(5)});
  out.push_back({"k4", complete_graph(4)});
  out.push_back({"k4_minus_edge", from_pairs(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}})});
  out.push_back({"theta_222", theta_graph({2, 2, 2})});
  out.push_back({"theta_123", theta_graph({1, 2, 3})});
  out.push_back({"k2_4", theta_graph({2, 2, 2, 2})});
  out.push_back({"wheel4", from_pairs(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 5}})});
  out.push_back({"wheel5", from_pairs(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 6}})});
  out.push_back({"octahedron", from_pairs(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {6, 2}, {6, 3}, {6, 4}, {6, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 5}})});
  out.push_back({"prism", from_pairs(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}})});
  out.push_back({"triangle_pendant", from_pairs(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}})});
  out.push_back({"bowtie", from_pairs(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}})});
  out.push_back({"triangle_square_chain", from_pairs(6, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 6}})});
  out.push_back({"three_triangles_at_vertex", from_pairs(7, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}, {1, 6}, {1, 7}, {6, 7}})});
  out.push_back({"square_with_pendants", from_pairs(6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {1, 6}})});
  out.push_back({"k4_with_pendant", from_pairs(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}})});
  out.push_back({"two_edges", disjoint_union(path_graph(2), path_graph(2))});
  out.push_back({"two_triangles", disjoint_union(cycle_graph(3), cycle_graph(3))});
  out.push_back({"triangle_and_edge", disjoint_union(cycle_graph(3), path_graph(2))});
  out.push_back({"three_edges", disjoint_union(disjoint_union(path_graph(2), path_graph(2)), path_graph(2))});
  out.push_back({"square_and_edge", disjoint_union(cycle_graph(4), path_graph(2))});
  out.push_back({"path3_and_triangle", disjoint_union(path_graph(3), cycle_graph(3))});
  out.push_back({"k4_and_edge", disjoint_union(complete_graph(4), path_graph(2))});
  out.push_back({"diamond_chain", from_pairs(7, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {2, 3}, {4, 5}, {4, 6}, {5, 7}, {6, 7}})});
  return out;
}

Graph curated(const std::string& name) {
  for (auto& g : curated_graphs())
    if (g.name == name) return g.graph;
  throw std::out_of_range("no curated graph " + name);
}

std::vector<Graph> all_planar_graphs(std::size_t n) {
  std::vector<EdgeId> all;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) all.push_back({a, b});
  std::vector<Graph> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<EdgeId> e;
    std::vector<char> touched(n + 1, 0);
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) {
        e.push_back(all[i]);
        touched[all[i].lo] = touched[all[i].hi] = 1;
      }
    if (std::count(touched.begin() + 1, touched.end(), 1) != static_cast<std::ptrdiff_t>(n)) continue;
    Graph g(n, e);
    if (is_planar(g)) out.push_back(std::move(g));
  }
  return out;
}

Graph random_planar_graph(std::size_t n, std::size_t target_edges, std::mt19937_64& rng) {
  std::vector<EdgeId> all;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) all.push_back({a, b});
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<EdgeId> e;
  std::vector<std::size_t> deg(n + 1, 0);
  for (const auto& x : all) {
    if (e.size() >= target_edges) break;
    e.push_back(x);
    if (!is_planar(Graph(n, e))) {
      e.pop_back();
      continue;
    }
    ++deg[x.lo];
    ++deg[x.hi];
  }
  // attach isolated vertices to random neighbors (keeps planarity)
  for (Vertex v = 1; v <= n; ++v)
    if (deg[v] == 0) {
      Vertex w = v;
      while (w == v) w = static_cast<Vertex>(1 + rng() % n);
      e.push_back(make_edge(v, w));
      ++deg[v];
      ++deg[w];
    }
  return Graph(n, e);
}

Graph random_biconnected_planar_graph(std::size_t n, std::mt19937_64& rng) {
  // a Hamiltonian cycle plus random chords is biconnected
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<EdgeId> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(make_edge(perm[i], perm[(i + 1) % n]));
  std::size_t chords = rng() % (2 * n);
  for (std::size_t k = 0; k < chords; ++k) {
    Vertex a = static_cast<Vertex>(1 + rng() % n), b = static_cast<Vertex>(1 + rng() % n);
    if (a == b) continue;
    EdgeId x = make_edge(a, b);
    if (std::find(e.begin(), e.end(), x) != e.end()) continue;
    e.push_back(x);
    if (!is_planar(Graph(n, e))) e.pop_back();
  }
  return Graph(n, e);
}

Graph large_planar_graph(std::size_t n, std::mt19937_64& rng) {
  std::size_t w = 1;
  while (w * w < n) ++w;
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * w + c + 1); };
  std::vector<EdgeId> e;
  for (std::size_t r = 0; r * w < n; ++r)
    for (std::size_t c = 0; c < w && r * w + c < n; ++c) {
      if (c + 1 < w && r * w + c + 1 < n) e.push_back({id(r, c), id(r, c + 1)});
      if ((r + 1) * w + c < n) e.push_back({id(r, c), id(r + 1, c)});
      if (c + 1 < w && (r + 1) * w + c + 1 < n) {
        if (rng() & 1)
          e.push_back({id(r, c), id(r + 1, c + 1)});
        else
          e.push_back(make_edge(id(r, c + 1), id(r + 1, c)));
      }
    }
  // delete edges at random but keep a spanning tree so the graph stays connected
  std::shuffle(e.begin(), e.end(), rng);
  UnionFind uf(n + 1);
  std::vector<EdgeId> tree, rest;
  for (const auto& x : e) {
    if (uf.find(x.lo) != uf.find(x.hi)) {
      uf.unite(x.lo, x.hi);
      tree.push_back(x);
    } else {
      rest.push_back(x);
    }
  }
  for (const auto& x : rest)
    if (rng() % 3 != 0) tree.push_back(x);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(Graph(n, tree), perm);
}

}  // namespace embrank::testing
