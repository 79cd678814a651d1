#include "embrank/graph.hpp"

#include <algorithm>
#include <string>

#include "embrank/error.hpp"

namespace embrank {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotBiconnected: return "NotBiconnected";
    case ErrorKind::NotPlanar: return "NotPlanar";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::MalformedTree: return "MalformedTree";
    case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorKind::EmbeddingMismatch: return "EmbeddingMismatch";
    case ErrorKind::GraphMismatch: return "GraphMismatch";
    case ErrorKind::UnknownFace: return "UnknownFace";
    case ErrorKind::EdgelessComponent: return "EdgelessComponent";
    case ErrorKind::IncompleteChoices: return "IncompleteChoices";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Error";
}

EdgeId make_edge(Vertex a, Vertex b) {
  return a < b ? EdgeId{a, b} : EdgeId{b, a};
}

Graph::Graph(std::size_t n, std::vector<EdgeId> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.lo == e.hi) throw Error(ErrorKind::MalformedInput, "self-loop at vertex " + std::to_string(e.lo));
    if (e.lo > e.hi) std::swap(e.lo, e.hi);
    if (e.lo < 1 || e.hi > n_)
      throw Error(ErrorKind::MalformedInput,
                  "edge (" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ") outside 1.." + std::to_string(n_));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw Error(ErrorKind::MalformedInput,
                "parallel edge (" + std::to_string(dup->lo) + "," + std::to_string(dup->hi) + ")");

  offset_.assign(n_ + 2, 0);
  for (auto e : edges_) {
    ++offset_[e.lo + 1];
    ++offset_[e.hi + 1];
  }
  for (std::size_t v = 1; v < offset_.size(); ++v) offset_[v] += offset_[v - 1];
  adj_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
  for (auto e : edges_) {
    adj_[fill[e.lo]++] = e.hi;
    adj_[fill[e.hi]++] = e.lo;
  }
  for (std::size_t v = 1; v <= n_; ++v) std::sort(adj_.begin() + offset_[v], adj_.begin() + offset_[v + 1]);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return {adj_.data() + offset_[v], offset_[v + 1] - offset_[v]};
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 1 || a > n_ || b < 1 || b > n_) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t Graph::edge_index(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    throw Error(ErrorKind::IndexOutOfRange, "edge (" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ") not in graph");
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<Component> connected_components(const Graph& g) {
  std::size_t n = g.num_vertices();
  std::vector<std::size_t> comp(n + 1, 0);
  std::vector<Component> out;
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= n; ++s) {
    if (comp[s]) continue;
    Component c;
    c.id = out.size() + 1;
    comp[s] = c.id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (v < w) c.edges.push_back({v, w});
        if (!comp[w]) {
          comp[w] = c.id;
          stack.push_back(w);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.edges.begin(), c.edges.end());
    out.push_back(std::move(c));
  }
  return out;
}

BlockCutTree biconnected_decomposition(const Graph& g) {
  std::size_t n = g.num_vertices();
  std::vector<std::size_t> disc(n + 1, 0), low(n + 1, 0);
  std::vector<Vertex> parent(n + 1, 0);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::vector<EdgeId> estack;
  std::vector<Block> blocks;
  std::size_t time = 0;

  for (Vertex root = 1; root <= n; ++root) {
    if (disc[root] || g.degree(root) == 0) continue;
    disc[root] = low[root] = ++time;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      Vertex v = f.v;
      auto nb = g.neighbors(v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (!disc[w]) {
          estack.push_back(make_edge(v, w));
          parent[w] = v;
          disc[w] = low[w] = ++time;
          frames.push_back({w, 0});
        } else if (w != parent[v] && disc[w] < disc[v]) {
          estack.push_back(make_edge(v, w));
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      frames.pop_back();
      if (frames.empty()) break;
      Vertex u = frames.back().v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        Block b;
        EdgeId stop = make_edge(u, v);
        while (true) {
          EdgeId e = estack.back();
          estack.pop_back();
          b.edges.push_back(e);
          b.vertices.push_back(e.lo);
          b.vertices.push_back(e.hi);
          if (e == stop) break;
        }
        std::sort(b.edges.begin(), b.edges.end());
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        blocks.push_back(std::move(b));
      }
    }
  }

  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });

  BlockCutTree t;
  std::vector<std::vector<std::size_t>> at(n + 1);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (Vertex v : blocks[i].vertices) at[v].push_back(i);
  for (Vertex v = 1; v <= n; ++v) {
    if (at[v].size() >= 2) {
      t.cut_vertices.push_back(v);
      t.arcs.push_back(std::move(at[v]));
    }
  }
  t.blocks = std::move(blocks);
  return t;
}

BlockCutTree block_cut_tree(const Graph& g) {
  if (connected_components(g).size() > 1) throw Error(ErrorKind::NotConnected, "graph has more than one component");
  return biconnected_decomposition(g);
}

std::size_t local_index(std::span<const Vertex> sorted_vertices, Vertex v) {
  auto it = std::lower_bound(sorted_vertices.begin(), sorted_vertices.end(), v);
  if (it == sorted_vertices.end() || *it != v)
    throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " not in subgraph");
  return static_cast<std::size_t>(it - sorted_vertices.begin());
}

}  // namespace embrank
