#include "embrank/rank_biconnected.hpp"

#include <algorithm>

#include "embrank/codecs.hpp"
#include "embrank/error.hpp"

namespace embrank {

BlockRanker::BlockRanker(std::span<const EdgeId> edges) : tree_(build_spqr(edges)), order_(conventional_order(tree_)) {
  for (int p : order_.p_nodes) branches_.push_back(p_branches(tree_, p));
}

std::vector<BigNat> BlockRanker::bounds() const {
  std::vector<BigNat> b;
  for (const auto& br : branches_) b.push_back(factorial(br.size()));
  for (std::size_t i = 0; i < order_.r_nodes.size(); ++i) b.push_back(2);
  return b;
}

BigNat BlockRanker::count() const { return bounds_product(bounds()); }

std::vector<BigNat> BlockRanker::flatten(const BiconnRankTuple& tuple) const {
  std::vector<BigNat> v(tuple.p.begin(), tuple.p.end());
  for (int r : tuple.r) v.push_back(r);
  return v;
}

BiconnRankTuple BlockRanker::unflatten(std::span<const BigNat> values) const {
  std::size_t y = order_.p_nodes.size(), z = order_.r_nodes.size();
  if (values.size() != y + z)
    throw Error(ErrorKind::BoundViolation, "block tuple needs " + std::to_string(y + z) + " values");
  BiconnRankTuple t;
  t.p.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(y));
  for (std::size_t i = 0; i < z; ++i) {
    if (values[y + i] < 0 || values[y + i] > 1) throw Error(ErrorKind::BoundViolation, "R-node value must be 0 or 1");
    t.r.push_back(static_cast<int>(values[y + i].get_si()));
  }
  return t;
}

SubRotation BlockRanker::chi_inverse(const BiconnRankTuple& tuple) const {
  if (tuple.p.size() != order_.p_nodes.size() || tuple.r.size() != order_.r_nodes.size())
    throw Error(ErrorKind::BoundViolation, "block tuple has the wrong length");
  std::vector<SkeletonEmbedding> choices;
  for (std::size_t i = 0; i < order_.p_nodes.size(); ++i) {
    const auto& br = branches_[i];
    if (tuple.p[i] < 0 || tuple.p[i] >= factorial(br.size()))
      throw Error(ErrorKind::BoundViolation, "P-node value " + to_decimal(tuple.p[i]) + " out of range");
    auto sigma = perm_unrank(tuple.p[i], br.size());
    SkeletonEmbedding s;
    s.node = order_.p_nodes[i];
    s.order.push_back(tree_.nodes[s.node].reference);
    for (auto k : sigma) s.order.push_back(br[k]);
    choices.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < order_.r_nodes.size(); ++i) {
    if (tuple.r[i] != 0 && tuple.r[i] != 1) throw Error(ErrorKind::BoundViolation, "R-node value must be 0 or 1");
    SkeletonEmbedding s = first_embedding_R(tree_, order_.r_nodes[i]);
    s.flip = tuple.r[i];
    choices.push_back(std::move(s));
  }
  return compose_embedding(tree_, choices);
}

BiconnRankTuple BlockRanker::chi(const SubRotation& rotation) const {
  const auto& t = tree_;
  if (rotation.vertices != t.vertices) throw Error(ErrorKind::EmbeddingMismatch, "rotation covers other vertices");

  // position of every neighbor in the rotation of each vertex
  std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> pos(t.vertices.size());
  std::vector<std::size_t> deg(t.vertices.size(), 0);
  for (auto e : t.edges) {
    ++deg[local_index(t.vertices, e.lo)];
    ++deg[local_index(t.vertices, e.hi)];
  }
  for (std::size_t x = 0; x < t.vertices.size(); ++x) {
    const auto& l = rotation.ccw[x];
    if (l.size() != deg[x]) throw Error(ErrorKind::EmbeddingMismatch, "rotation does not match the block");
    for (std::size_t i = 0; i < l.size(); ++i) pos[x].push_back({l[i], static_cast<std::uint32_t>(i)});
    std::sort(pos[x].begin(), pos[x].end());
  }
  auto position = [&](Vertex x, Vertex w) -> std::uint32_t {
    const auto& px = pos[local_index(t.vertices, x)];
    auto it = std::lower_bound(px.begin(), px.end(), std::make_pair(w, std::uint32_t{0}));
    if (it == px.end() || it->first != w) throw Error(ErrorKind::EmbeddingMismatch, "rotation misses a block edge");
    return it->second;
  };

  BiconnRankTuple out;
  if (t.nodes.empty()) return out;

  std::vector<std::size_t> base(t.nodes.size() + 1, 0);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) base[i + 1] = base[i] + 2 * t.nodes[i].edges.size();
  auto slot = [&](int node, int e, Vertex x) {
    return base[node] + 2 * static_cast<std::size_t>(e) + (t.nodes[node].edges[e].u == x ? 0 : 1);
  };
  // rep[slot] = far end of a real edge at the slot's vertex inside the
  // expansion of that skeleton edge
  std::vector<Vertex> rep(base.back(), 0);

  std::vector<int> bfs{t.root};
  for (std::size_t k = 0; k < bfs.size(); ++k)
    for (int c : t.nodes[bfs[k]].children) bfs.push_back(c);

  auto other_edge_at = [&](int node, Vertex x, int avoid) {
    const auto& nd = t.nodes[node];
    for (int e : nd.incident[nd.local(x)])
      if (e != avoid) return e;
    return -1;
  };

  for (std::size_t k = bfs.size(); k-- > 0;) {
    int mu = bfs[k];
    const auto& nd = t.nodes[mu];
    for (std::size_t i = 0; i < nd.edges.size(); ++i) {
      const auto& se = nd.edges[i];
      int ie = static_cast<int>(i);
      if (!se.is_virtual) {
        rep[slot(mu, ie, se.u)] = se.v;
        rep[slot(mu, ie, se.v)] = se.u;
      } else if (ie != nd.reference) {
        for (Vertex x : {se.u, se.v}) {
          int k2 = other_edge_at(se.twin_node, x, se.twin_edge);
          rep[slot(mu, ie, x)] = rep[slot(se.twin_node, k2, x)];
        }
      }
    }
  }
  for (int mu : bfs) {
    const auto& nd = t.nodes[mu];
    if (nd.parent < 0) continue;
    const auto& ref = nd.edges[nd.reference];
    for (Vertex x : {ref.u, ref.v}) {
      int k2 = other_edge_at(ref.twin_node, x, ref.twin_edge);
      rep[slot(mu, nd.reference, x)] = rep[slot(ref.twin_node, k2, x)];
    }
  }

  auto ccw_at = [&](int mu, Vertex x) {
    const auto& nd = t.nodes[mu];
    std::vector<std::pair<std::uint32_t, int>> keyed;
    for (int e : nd.incident[nd.local(x)]) keyed.push_back({position(x, rep[slot(mu, e, x)]), e});
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> l;
    for (auto& kv : keyed) l.push_back(kv.second);
    return l;
  };

  for (std::size_t i = 0; i < order_.p_nodes.size(); ++i) {
    int mu = order_.p_nodes[i];
    const auto& nd = t.nodes[mu];
    auto l = ccw_at(mu, nd.vertices[0]);
    std::reverse(l.begin(), l.end());
    std::rotate(l.begin(), std::find(l.begin(), l.end(), nd.reference), l.end());
    const auto& br = branches_[i];
    std::vector<std::size_t> sigma;
    for (std::size_t k = 1; k < l.size(); ++k)
      sigma.push_back(static_cast<std::size_t>(std::find(br.begin(), br.end(), l[k]) - br.begin()));
    out.p.push_back(perm_rank(sigma));
  }
  for (int mu : order_.r_nodes) {
    const auto& nd = t.nodes[mu];
    Vertex u = nd.edges[nd.reference].u;
    auto l = ccw_at(mu, u);
    auto other = [&](int e) { return nd.edges[e].u == u ? nd.edges[e].v : nd.edges[e].u; };
    std::size_t d = l.size(), i1 = 0;
    for (std::size_t k = 1; k < d; ++k)
      if (other(l[k]) < other(l[i1])) i1 = k;
    Vertex pred = other(l[(i1 + d - 1) % d]);
    Vertex succ = other(l[(i1 + 1) % d]);
    out.r.push_back(pred < succ ? 0 : 1);
  }
  return out;
}

}  // namespace embrank
