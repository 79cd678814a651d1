#include "embrank/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "embrank/error.hpp"

namespace embrank::oracle {

namespace {

std::size_t euler_faces(const Graph& g) { return g.num_edges() + 2 - g.num_vertices(); }

bool is_plane(const Graph& g, const RotationSystem& rot) {
  auto trace = trace_faces(g, rot);
  return trace.per_component.size() == 1 && trace.per_component[0].size() == euler_faces(g);
}

}  // namespace

std::vector<RotationSystem> enumerate_connected(const Graph& g, const Limits& limits) {
  std::size_t n = g.num_vertices();
  if (n > limits.max_vertices) throw Error(ErrorKind::TooLarge, "oracle limited to " + std::to_string(limits.max_vertices) + " vertices");
  if (connected_components(g).size() != 1) throw Error(ErrorKind::NotConnected, "oracle expects a connected graph");
  double candidates = 1;
  for (Vertex v = 1; v <= n; ++v)
    for (std::size_t k = 2; k < g.degree(v); ++k) candidates *= static_cast<double>(k);
  if (candidates > static_cast<double>(limits.max_candidates))
    throw Error(ErrorKind::TooLarge, "oracle would try " + std::to_string(candidates) + " rotation systems");

  RotationSystem rot(n);
  for (Vertex v = 1; v <= n; ++v) {
    auto nb = g.neighbors(v);
    rot.set(v, std::vector<Vertex>(nb.begin(), nb.end()));
  }
  // The smallest neighbor stays first, so every cyclic order is visited once.
  std::vector<RotationSystem> out;
  std::function<void(Vertex)> rec = [&](Vertex v) {
    if (v > n) {
      if (is_plane(g, rot)) out.push_back(rot);
      return;
    }
    auto& l = rot.list(v);
    do {
      rec(v + 1);
    } while (l.size() > 2 && std::next_permutation(l.begin() + 1, l.end()));
  };
  rec(1);
  return out;
}

std::vector<NestingTree> enumerate_nesting_trees(const std::vector<std::size_t>& face_counts) {
  std::size_t c = face_counts.size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (owner, label) incl. the root
  slots.push_back({0, 0});
  std::size_t label = 1;
  for (std::size_t h = 1; h <= c; ++h)
    for (std::size_t f = 1; f < face_counts[h - 1]; ++f) slots.push_back({h, label++});

  std::vector<NestingTree> out;
  NestingTree tree;
  tree.links.resize(c);
  auto acyclic = [&] {
    for (std::size_t h = 1; h <= c; ++h) {
      std::size_t x = h;
      for (std::size_t steps = 0; x != 0; ++steps) {
        if (steps > c) return false;
        x = tree.of(x).parent;
      }
    }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t h) {
    if (h > c) {
      if (acyclic()) out.push_back(tree);
      return;
    }
    for (auto [owner, lab] : slots) {
      if (owner == h) continue;
      tree.links[h - 1] = {owner, lab};
      rec(h + 1);
    }
  };
  rec(1);
  return out;
}

std::set<std::string> enumerate_embeddings(const Graph& g, const Limits& limits) {
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    if (g.degree(v) == 0) throw Error(ErrorKind::EdgelessComponent, "vertex " + std::to_string(v) + " is isolated");
  auto comps = connected_components(g);

  // Rotations of each component, mapped back to global vertex ids.
  std::vector<std::vector<RotationSystem>> per_comp;
  std::vector<std::size_t> counts;
  double total = 1;
  for (const auto& comp : comps) {
    std::vector<EdgeId> local;
    for (const auto& e : comp.edges)
      local.push_back(make_edge(static_cast<Vertex>(local_index(comp.vertices, e.lo) + 1),
                                static_cast<Vertex>(local_index(comp.vertices, e.hi) + 1)));
    Graph sub(comp.vertices.size(), local);
    counts.push_back(euler_faces(sub));
    std::vector<RotationSystem> mapped;
    for (const auto& r : enumerate_connected(sub, limits)) {
      RotationSystem m(g.num_vertices());
      for (Vertex v = 1; v <= sub.num_vertices(); ++v) {
        std::vector<Vertex> l;
        for (Vertex w : r.around(v)) l.push_back(comp.vertices[w - 1]);
        m.set(comp.vertices[v - 1], std::move(l));
      }
      mapped.push_back(std::move(m));
    }
    total *= static_cast<double>(mapped.size()) * static_cast<double>(counts.back());
    per_comp.push_back(std::move(mapped));
  }
  auto trees = enumerate_nesting_trees(counts);
  total *= static_cast<double>(trees.size());
  if (total > static_cast<double>(limits.max_candidates)) throw Error(ErrorKind::TooLarge, "too many embeddings for the oracle");

  std::set<std::string> out;
  std::size_t c = comps.size();
  RotationSystem rot(g.num_vertices());
  std::vector<std::size_t> ft(c, 0);
  std::function<void(std::size_t)> pick_rotation = [&](std::size_t i) {
    if (i == c) {
      // odometer over face tuples
      std::fill(ft.begin(), ft.end(), 0);
      while (true) {
        for (const auto& t : trees) out.insert(canonical_key(rot, t, ft));
        std::size_t k = 0;
        while (k < c && ++ft[k] == counts[k]) ft[k++] = 0;
        if (k == c) break;
      }
      return;
    }
    for (const auto& r : per_comp[i]) {
      for (Vertex v : comps[i].vertices) {
        auto l = r.around(v);
        rot.set(v, std::vector<Vertex>(l.begin(), l.end()));
      }
      pick_rotation(i + 1);
    }
  };
  pick_rotation(0);
  return out;
}

std::set<std::vector<Vertex>> enumerate_arrangements(const std::vector<std::vector<Vertex>>& block_ccw, std::size_t max_degree) {
  // Model each block by a hub x_j adjacent to all of its neighbors of v, so
  // the block has the prescribed cyclic order at v, then keep the orders
  // around v for which the whole model satisfies Euler's formula.
  std::vector<Vertex> nbrs;
  for (const auto& b : block_ccw) nbrs.insert(nbrs.end(), b.begin(), b.end());
  std::sort(nbrs.begin(), nbrs.end());
  std::size_t delta = nbrs.size();
  if (delta > max_degree) throw Error(ErrorKind::TooLarge, "arrangement oracle limited to degree " + std::to_string(max_degree));
  if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
    throw Error(ErrorKind::MalformedInput, "a neighbor appears in two blocks");

  // vertex 1 = v, 2..delta+1 = neighbors, then one hub per block
  auto id = [&](Vertex w) { return static_cast<Vertex>(local_index(nbrs, w) + 2); };
  std::size_t k = block_ccw.size();
  std::size_t n = 1 + delta + k;
  std::vector<EdgeId> edges;
  for (std::size_t j = 0; j < k; ++j) {
    Vertex hub = static_cast<Vertex>(2 + delta + j);
    for (Vertex w : block_ccw[j]) {
      edges.push_back(make_edge(1, id(w)));
      edges.push_back(make_edge(hub, id(w)));
    }
  }
  Graph model(n, edges);
  RotationSystem rot(n);
  for (Vertex w : nbrs) rot.set(id(w), {1, static_cast<Vertex>(2 + delta + [&] {
                                           std::size_t j = 0;
                                           while (std::find(block_ccw[j].begin(), block_ccw[j].end(), w) == block_ccw[j].end()) ++j;
                                           return j;
                                         }())});
  // hub orientation: the mirror of the order at v makes each block planar
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Vertex> l;
    for (auto it = block_ccw[j].rbegin(); it != block_ccw[j].rend(); ++it) l.push_back(id(*it));
    rot.set(static_cast<Vertex>(2 + delta + j), std::move(l));
  }

  std::set<std::vector<Vertex>> out;
  std::vector<Vertex> order = nbrs;
  do {
    // each block must keep its cyclic order
    bool keeps = true;
    for (const auto& b : block_ccw) {
      std::vector<Vertex> sub;
      for (Vertex w : order)
        if (std::find(b.begin(), b.end(), w) != b.end()) sub.push_back(w);
      auto at = std::find(sub.begin(), sub.end(), b.front());
      std::rotate(sub.begin(), at, sub.end());
      if (sub != b) keeps = false;
    }
    if (!keeps) continue;
    std::vector<Vertex> l;
    for (Vertex w : order) l.push_back(id(w));
    rot.set(1, std::move(l));
    if (is_plane(model, rot)) out.insert(order);
  } while (delta > 2 && std::next_permutation(order.begin() + 1, order.end()));
  return out;
}

}  // namespace embrank::oracle
