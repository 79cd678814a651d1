#include "embrank/spqr.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "embrank/error.hpp"
#include "embrank/planarity.hpp"
#include "triconnectivity.hpp"

namespace embrank {

namespace {

std::string edge_text(EdgeId e) { return "(" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ")"; }

void check_biconnected(const std::vector<Vertex>& vertices, std::span<const EdgeId> edges) {
  std::vector<EdgeId> local;
  local.reserve(edges.size());
  for (auto e : edges)
    local.push_back({static_cast<Vertex>(local_index(vertices, e.lo) + 1), static_cast<Vertex>(local_index(vertices, e.hi) + 1)});
  Graph g(vertices.size(), std::move(local));
  auto bct = biconnected_decomposition(g);
  if (bct.blocks.size() != 1) throw Error(ErrorKind::NotBiconnected, "graph has " + std::to_string(bct.blocks.size()) + " blocks");
}

void orient_r_skeleton(SpqrNode& node) {
  std::size_t nv = node.vertices.size();
  std::vector<LocalEdge> local;
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> index;
  for (std::size_t i = 0; i < node.edges.size(); ++i) {
    auto a = static_cast<std::uint32_t>(node.local(node.edges[i].u));
    auto b = static_cast<std::uint32_t>(node.local(node.edges[i].v));
    local.push_back({a, b});
    index[{a, b}] = static_cast<int>(i);
  }
  auto rot = planar_rotation(nv, local);
  if (!rot) throw Error(ErrorKind::NotPlanar, "a triconnected component is not planar");
  node.first_rotation.assign(nv, {});
  for (std::size_t x = 0; x < nv; ++x) {
    for (auto y : (*rot)[x]) {
      auto key = x < y ? std::make_pair(static_cast<std::uint32_t>(x), y) : std::make_pair(y, static_cast<std::uint32_t>(x));
      node.first_rotation[x].push_back(index.at(key));
    }
  }
  // Pole rule: at the smaller pole u, the edge to the smallest neighbor w1 is
  // immediately preceded counter-clockwise by the smaller of its two
  // rotation neighbors.
  Vertex u = node.edges[node.reference].u;
  const auto& at_u = node.first_rotation[node.local(u)];
  auto other = [&](int e) { return node.edges[e].u == u ? node.edges[e].v : node.edges[e].u; };
  std::size_t d = at_u.size();
  std::size_t i1 = 0;
  for (std::size_t i = 1; i < d; ++i)
    if (other(at_u[i]) < other(at_u[i1])) i1 = i;
  Vertex pred = other(at_u[(i1 + d - 1) % d]);
  Vertex succ = other(at_u[(i1 + 1) % d]);
  if (pred > succ)
    for (auto& l : node.first_rotation) std::reverse(l.begin(), l.end());
}

}  // namespace

SpqrTree build_spqr(const Graph& g) { return build_spqr(g.edges()); }

SpqrTree build_spqr(std::span<const EdgeId> input) {
  SpqrTree t;
  t.edges.assign(input.begin(), input.end());
  std::sort(t.edges.begin(), t.edges.end());
  if (t.edges.empty()) throw Error(ErrorKind::NotBiconnected, "no edges");
  for (auto e : t.edges) {
    t.vertices.push_back(e.lo);
    t.vertices.push_back(e.hi);
  }
  std::sort(t.vertices.begin(), t.vertices.end());
  t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());
  t.reference_edge = t.edges.front();
  if (t.edges.size() == 1) return t;

  check_biconnected(t.vertices, t.edges);

  std::vector<std::pair<int, int>> local;
  for (auto e : t.edges)
    local.push_back({static_cast<int>(local_index(t.vertices, e.lo)), static_cast<int>(local_index(t.vertices, e.hi))});
  auto tc = detail::triconnected_components(static_cast<int>(t.vertices.size()), local);

  // occurrences of every edge id: (node, skeleton index)
  std::vector<std::vector<std::pair<int, int>>> where(tc.ends.size());
  for (const auto& comp : tc.components) {
    SpqrNode node;
    node.kind = comp.type == detail::CompType::Bond      ? SpqrKind::P
                : comp.type == detail::CompType::Polygon ? SpqrKind::S
                                                         : SpqrKind::R;
    int id = static_cast<int>(t.nodes.size());
    for (int e : comp.edges) {
      auto [a, b] = tc.ends[e];
      Vertex ga = t.vertices[a], gb = t.vertices[b];
      SkeletonEdge se;
      se.u = std::min(ga, gb);
      se.v = std::max(ga, gb);
      se.is_virtual = static_cast<std::size_t>(e) >= tc.num_real;
      where[e].push_back({id, static_cast<int>(node.edges.size())});
      node.edges.push_back(se);
      node.vertices.push_back(se.u);
      node.vertices.push_back(se.v);
    }
    std::sort(node.vertices.begin(), node.vertices.end());
    node.vertices.erase(std::unique(node.vertices.begin(), node.vertices.end()), node.vertices.end());
    node.incident.assign(node.vertices.size(), {});
    for (std::size_t i = 0; i < node.edges.size(); ++i) {
      node.incident[node.local(node.edges[i].u)].push_back(static_cast<int>(i));
      node.incident[node.local(node.edges[i].v)].push_back(static_cast<int>(i));
    }
    t.nodes.push_back(std::move(node));
  }
  for (std::size_t e = tc.num_real; e < where.size(); ++e) {
    if (where[e].empty()) continue;
    auto [n1, i1] = where[e][0];
    auto [n2, i2] = where[e][1];
    t.nodes[n1].edges[i1].twin_node = n2;
    t.nodes[n1].edges[i1].twin_edge = i2;
    t.nodes[n2].edges[i2].twin_node = n1;
    t.nodes[n2].edges[i2].twin_edge = i1;
  }

  // Root at the node holding the minimum edge; real edge 0 is the minimum.
  auto [root, root_ref] = where[0][0];
  t.root = root;
  t.nodes[root].reference = root_ref;
  t.nodes[root].depth = 1;
  std::vector<int> order{root};
  for (std::size_t k = 0; k < order.size(); ++k) {
    int mu = order[k];
    auto& node = t.nodes[mu];
    for (std::size_t i = 0; i < node.edges.size(); ++i) {
      const auto& se = node.edges[i];
      if (!se.is_virtual || static_cast<int>(i) == node.reference) continue;
      auto& child = t.nodes[se.twin_node];
      child.parent = mu;
      child.reference = se.twin_edge;
      child.depth = node.depth + 1;
      node.children.push_back(se.twin_node);
      order.push_back(se.twin_node);
    }
  }
  for (std::size_t k = order.size(); k-- > 0;) {
    auto& node = t.nodes[order[k]];
    bool have = false;
    EdgeId best{};
    for (std::size_t i = 0; i < node.edges.size(); ++i) {
      const auto& se = node.edges[i];
      EdgeId cand;
      if (static_cast<int>(i) == node.reference) continue;
      if (se.is_virtual)
        cand = t.nodes[se.twin_node].min_edge;
      else
        cand = {se.u, se.v};
      if (!have || cand < best) {
        best = cand;
        have = true;
      }
    }
    node.min_edge = best;
  }
  for (auto& node : t.nodes)
    if (node.kind == SpqrKind::R) orient_r_skeleton(node);
  return t;
}

ConventionalOrder conventional_order(const SpqrTree& t) {
  ConventionalOrder o;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (t.nodes[i].kind == SpqrKind::P) o.p_nodes.push_back(static_cast<int>(i));
    if (t.nodes[i].kind == SpqrKind::R) o.r_nodes.push_back(static_cast<int>(i));
  }
  auto key = [&](int a, int b) {
    const auto &x = t.nodes[a], &y = t.nodes[b];
    return x.depth != y.depth ? x.depth < y.depth : x.min_edge < y.min_edge;
  };
  std::sort(o.p_nodes.begin(), o.p_nodes.end(), key);
  std::sort(o.r_nodes.begin(), o.r_nodes.end(), key);
  return o;
}

std::vector<int> p_branches(const SpqrTree& t, int node) {
  const auto& nd = t.nodes.at(node);
  std::vector<std::pair<EdgeId, int>> keyed;
  for (std::size_t i = 0; i < nd.edges.size(); ++i) {
    if (static_cast<int>(i) == nd.reference) continue;
    const auto& se = nd.edges[i];
    keyed.push_back({se.is_virtual ? t.nodes[se.twin_node].min_edge : EdgeId{se.u, se.v}, static_cast<int>(i)});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (auto& k : keyed) out.push_back(k.second);
  return out;
}

SkeletonEmbedding first_embedding_P(const SpqrTree& t, int node) {
  SkeletonEmbedding s;
  s.node = node;
  s.order.push_back(t.nodes.at(node).reference);
  auto rest = p_branches(t, node);
  s.order.insert(s.order.end(), rest.begin(), rest.end());
  return s;
}

SkeletonEmbedding first_embedding_R(const SpqrTree& t, int node) {
  (void)t.nodes.at(node);
  return {node, {}, 0};
}

std::vector<std::vector<int>> skeleton_rotation(const SpqrTree& t, const SkeletonEmbedding& choice) {
  const auto& nd = t.nodes.at(choice.node);
  switch (nd.kind) {
    case SpqrKind::R: {
      auto rot = nd.first_rotation;
      if (choice.flip)
        for (auto& l : rot) std::reverse(l.begin(), l.end());
      return rot;
    }
    case SpqrKind::P: {
      // order is clockwise at the smaller pole, hence counter-clockwise at the other one
      std::vector<std::vector<int>> rot(2);
      rot[1] = choice.order;
      rot[0].assign(choice.order.rbegin(), choice.order.rend());
      return rot;
    }
    default:
      return nd.incident;
  }
}

SubRotation compose_embedding(const SpqrTree& t, std::span<const SkeletonEmbedding> choices) {
  SubRotation out;
  out.vertices = t.vertices;
  out.ccw.assign(t.vertices.size(), {});
  if (t.nodes.empty()) {
    auto e = t.reference_edge;
    out.ccw[0] = {e.hi};
    out.ccw[1] = {e.lo};
    return out;
  }

  std::vector<const SkeletonEmbedding*> chosen(t.nodes.size(), nullptr);
  for (const auto& c : choices) {
    if (c.node < 0 || c.node >= static_cast<int>(t.nodes.size()))
      throw Error(ErrorKind::IncompleteChoices, "choice for unknown node " + std::to_string(c.node));
    chosen[c.node] = &c;
  }
  std::vector<std::size_t> base(t.nodes.size() + 1, 0);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) base[i + 1] = base[i] + 2 * t.nodes[i].edges.size();
  auto slot = [&](int node, int e, Vertex x) {
    return base[node] + 2 * static_cast<std::size_t>(e) + (t.nodes[node].edges[e].u == x ? 0 : 1);
  };
  std::vector<std::size_t> next(base.back()), prev(base.back());

  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& nd = t.nodes[i];
    std::vector<std::vector<int>> rot;
    if (nd.kind == SpqrKind::S) {
      rot = nd.incident;
    } else {
      if (!chosen[i]) throw Error(ErrorKind::IncompleteChoices, "no embedding chosen for node " + std::to_string(i));
      rot = skeleton_rotation(t, *chosen[i]);
    }
    for (std::size_t x = 0; x < rot.size(); ++x) {
      Vertex vx = nd.vertices[x];
      const auto& l = rot[x];
      for (std::size_t k = 0; k < l.size(); ++k) {
        std::size_t a = slot(static_cast<int>(i), l[k], vx);
        std::size_t b = slot(static_cast<int>(i), l[(k + 1) % l.size()], vx);
        next[a] = b;
        prev[b] = a;
      }
    }
  }

  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& nd = t.nodes[i];
    if (nd.parent < 0) continue;
    const auto& ref = nd.edges[nd.reference];
    for (Vertex x : {ref.u, ref.v}) {
      std::size_t sb = slot(static_cast<int>(i), nd.reference, x);
      std::size_t sa = slot(ref.twin_node, ref.twin_edge, x);
      std::size_t pa = prev[sa], na = next[sa], pb = prev[sb], nb = next[sb];
      next[pa] = nb;
      prev[nb] = pa;
      next[pb] = na;
      prev[na] = pb;
    }
  }

  std::vector<char> seen(t.vertices.size(), 0);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& nd = t.nodes[i];
    for (std::size_t e = 0; e < nd.edges.size(); ++e) {
      const auto& se = nd.edges[e];
      if (se.is_virtual) continue;
      for (Vertex x : {se.u, se.v}) {
        std::size_t lx = local_index(t.vertices, x);
        if (seen[lx]) continue;
        seen[lx] = 1;
        std::size_t s0 = slot(static_cast<int>(i), static_cast<int>(e), x), s = s0;
        do {
          // slot index decodes to (node, edge, side)
          std::size_t node = static_cast<std::size_t>(std::upper_bound(base.begin(), base.end(), s) - base.begin()) - 1;
          std::size_t off = s - base[node];
          const auto& te = t.nodes[node].edges[off / 2];
          out.ccw[lx].push_back(off % 2 == 0 ? te.v : te.u);
          s = next[s];
        } while (s != s0);
      }
    }
  }
  return out;
}

std::string SpqrTree::dump() const {
  std::ostringstream os;
  os << "Q 0 " << edge_text(reference_edge) << " [" << edge_text(reference_edge) << "]\n";
  if (nodes.empty()) return os.str();
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int mu = stack.back();
    stack.pop_back();
    const auto& nd = nodes[mu];
    const char* kind = nd.kind == SpqrKind::S ? "S" : nd.kind == SpqrKind::P ? "P" : "R";
    os << kind << " " << nd.depth << " " << edge_text(nd.min_edge) << " [";
    for (std::size_t i = 0; i < nd.edges.size(); ++i) {
      if (i) os << " ";
      os << edge_text({nd.edges[i].u, nd.edges[i].v}) << (nd.edges[i].is_virtual ? "*" : "");
    }
    os << "]\n";
    for (std::size_t i = 0; i < nd.edges.size(); ++i) {
      const auto& se = nd.edges[i];
      if (se.is_virtual || (mu == root && static_cast<int>(i) == nd.reference)) continue;
      os << "Q " << nd.depth + 1 << " " << edge_text({se.u, se.v}) << " [" << edge_text({se.u, se.v}) << "]\n";
    }
    for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.push_back(*it);
  }
  return os.str();
}

}  // namespace embrank
