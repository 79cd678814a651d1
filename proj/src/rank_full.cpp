#include "embrank/rank_full.hpp"

#include <string>

#include "embrank/codecs.hpp"
#include "embrank/error.hpp"

namespace embrank {

namespace {

std::shared_ptr<const Graph> checked(std::shared_ptr<const Graph> g) {
  if (!g) throw Error(ErrorKind::MalformedInput, "no graph");
  for (Vertex v = 1; v <= g->num_vertices(); ++v)
    if (g->degree(v) == 0) throw Error(ErrorKind::EdgelessComponent, "vertex " + std::to_string(v) + " is isolated");
  if (g->num_vertices() == 0) throw Error(ErrorKind::MalformedInput, "graph has no vertices");
  return g;
}

}  // namespace

EmbeddingRanker::EmbeddingRanker(std::shared_ptr<const Graph> graph)
    : graph_(checked(std::move(graph))), bct_(biconnected_decomposition(*graph_)), nesting_(face_counts(*graph_)) {
  const Graph& g = *graph_;
  edge_block_.resize(g.num_edges());
  blocks_.reserve(bct_.blocks.size());
  for (std::size_t b = 0; b < bct_.blocks.size(); ++b) {
    for (const auto& e : bct_.blocks[b].edges) edge_block_[g.edge_index(e)] = b;
    blocks_.emplace_back(bct_.blocks[b].edges);
  }

  for (Vertex v : bct_.cut_vertices) {
    std::vector<std::vector<Vertex>> per_block;
    std::vector<std::size_t> global;
    for (Vertex w : g.neighbors(v)) {
      std::size_t b = edge_block(v, w);
      std::size_t j = 0;
      while (j < global.size() && global[j] != b) ++j;
      if (j == global.size()) {
        global.push_back(b);
        per_block.emplace_back();
      }
      per_block[j].push_back(w);
    }
    cuts_.emplace_back(v, std::move(per_block));
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < cuts_.back().num_blocks(); ++j)
      order.push_back(edge_block(v, cuts_.back().block_neighbors(j).front()));
    cut_blocks_.push_back(std::move(order));
  }

  auto push = [&](char kind, const std::vector<BigNat>& values) {
    if (values.empty()) return;
    if (segments_.empty() || segments_.back().kind != kind) segments_.push_back({kind, bounds_.size(), bounds_.size()});
    bounds_.insert(bounds_.end(), values.begin(), values.end());
    segments_.back().end = bounds_.size();
  };
  auto nb = nesting_.bounds();
  std::size_t c = nesting_.intervals().components();
  push('a', std::vector<BigNat>(nb.begin(), nb.begin() + static_cast<std::ptrdiff_t>(c - 1)));
  push('b', std::vector<BigNat>(nb.begin() + static_cast<std::ptrdiff_t>(c - 1), nb.end()));
  for (const auto& cr : cuts_) {
    auto b = cr.bounds();
    push('c', std::vector<BigNat>(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(cr.num_blocks())));
  }
  for (const auto& cr : cuts_) {
    auto b = cr.bounds();
    push('d', std::vector<BigNat>(b.begin() + static_cast<std::ptrdiff_t>(cr.num_blocks()), b.end()));
  }
  for (const auto& br : blocks_) {
    auto b = br.bounds();
    push('p', std::vector<BigNat>(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(br.order().p_nodes.size())));
  }
  for (const auto& br : blocks_) {
    auto b = br.bounds();
    push('r', std::vector<BigNat>(b.begin() + static_cast<std::ptrdiff_t>(br.order().p_nodes.size()), b.end()));
  }
}

BigNat EmbeddingRanker::count() const { return bounds_product(bounds_); }

std::vector<SubRotation> EmbeddingRanker::restrict_to_blocks(const RotationSystem& rot) const {
  std::vector<SubRotation> out(bct_.blocks.size());
  for (std::size_t b = 0; b < out.size(); ++b) {
    out[b].vertices = bct_.blocks[b].vertices;
    out[b].ccw.resize(out[b].vertices.size());
  }
  for (Vertex v = 1; v <= graph_->num_vertices(); ++v)
    for (Vertex w : rot.around(v)) {
      auto& sub = out[edge_block(v, w)];
      sub.ccw[local_index(sub.vertices, v)].push_back(w);
    }
  return out;
}

std::vector<BigNat> EmbeddingRanker::phi(const PlanarEmbedding& emb) const {
  if (!emb.graph || !(*emb.graph == *graph_)) throw Error(ErrorKind::GraphMismatch, "embedding belongs to another graph");
  auto diag = validate(emb);
  if (!diag.empty()) throw Error(ErrorKind::EmbeddingMismatch, diag.front());

  std::vector<BigNat> out = nesting_.rank(digamma(emb));
  std::vector<CutvertexTuple> cut_tuples;
  for (const auto& cr : cuts_) cut_tuples.push_back(cr.rank(emb.rotation.around(cr.vertex())));
  for (const auto& t : cut_tuples)
    for (auto x : t.c) out.push_back(static_cast<unsigned long>(x));
  for (const auto& t : cut_tuples)
    for (auto x : t.d) out.push_back(static_cast<unsigned long>(x));
  auto subs = restrict_to_blocks(emb.rotation);
  std::vector<BiconnRankTuple> block_tuples;
  for (std::size_t b = 0; b < blocks_.size(); ++b) block_tuples.push_back(blocks_[b].chi(subs[b]));
  for (const auto& t : block_tuples) out.insert(out.end(), t.p.begin(), t.p.end());
  for (const auto& t : block_tuples)
    for (int r : t.r) out.push_back(r);
  return out;
}

PlanarEmbedding EmbeddingRanker::phi_inverse(std::span<const BigNat> values) const {
  if (values.size() != bounds_.size())
    throw Error(ErrorKind::BoundViolation, "tuple has " + std::to_string(values.size()) + " values, expected " +
                                               std::to_string(bounds_.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < 0 || values[i] >= bounds_[i])
      throw Error(ErrorKind::BoundViolation, "tuple value " + std::to_string(i) + " out of range");

  std::size_t at = 0;
  auto take = [&](std::size_t k) {
    auto s = values.subspan(at, k);
    at += k;
    return s;
  };
  std::size_t c = nesting_.intervals().components();
  NestingPlacement placement = nesting_.unrank(take(2 * c - 1));

  std::vector<CutvertexTuple> cut_tuples(cuts_.size());
  for (std::size_t i = 0; i < cuts_.size(); ++i)
    for (const auto& x : take(cuts_[i].num_blocks())) cut_tuples[i].c.push_back(x.get_ui());
  for (std::size_t i = 0; i < cuts_.size(); ++i)
    for (const auto& x : take(cuts_[i].num_blocks() - 2)) cut_tuples[i].d.push_back(x.get_ui());

  std::vector<BiconnRankTuple> block_tuples(blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto p = take(blocks_[b].order().p_nodes.size());
    block_tuples[b].p.assign(p.begin(), p.end());
  }
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (const auto& x : take(blocks_[b].order().r_nodes.size())) block_tuples[b].r.push_back(static_cast<int>(x.get_ui()));

  std::vector<SubRotation> subs;
  subs.reserve(blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) subs.push_back(blocks_[b].chi_inverse(block_tuples[b]));

  const Graph& g = *graph_;
  RotationSystem rot(g.num_vertices());
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    const auto& sub = subs[edge_block(v, g.neighbors(v).front())];
    auto l = sub.around(v);
    rot.set(v, std::vector<Vertex>(l.begin(), l.end()));
  }
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    const auto& cr = cuts_[i];
    std::vector<std::vector<Vertex>> block_ccw;
    for (std::size_t b : cut_blocks_[i]) {
      auto l = subs[b].around(cr.vertex());
      block_ccw.emplace_back(l.begin(), l.end());
    }
    rot.set(cr.vertex(), cr.unrank(cut_tuples[i], block_ccw));
  }
  return {graph_, std::move(rot), std::move(placement.tree), std::move(placement.face_tuple)};
}

BigNat EmbeddingRanker::rank(const PlanarEmbedding& emb) const { return tuple_rank(phi(emb), bounds_); }

PlanarEmbedding EmbeddingRanker::unrank(const BigNat& rank) const { return phi_inverse(tuple_unrank(rank, bounds_)); }

PlanarEmbedding EmbeddingRanker::sample(std::mt19937_64& rng) const {
  std::vector<BigNat> values;
  values.reserve(bounds_.size());
  for (const auto& b : bounds_) values.push_back(uniform_below(b, rng));
  return phi_inverse(values);
}

void EmbeddingRanker::enumerate(const BigNat& from, std::size_t limit,
                                const std::function<bool(const BigNat&, const PlanarEmbedding&)>& emit) const {
  auto digits = tuple_unrank(from, bounds_);
  BigNat r = from, total = count();
  for (std::size_t k = 0; k < limit && r < total; ++k) {
    if (!emit(r, phi_inverse(digits))) return;
    ++r;
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < bounds_[i]) break;
      digits[i] = 0;
    }
  }
}

BigNat count_embeddings(const Graph& g) { return EmbeddingRanker(g).count(); }

}  // namespace embrank
