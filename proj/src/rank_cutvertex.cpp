#include "embrank/rank_cutvertex.hpp"

#include <algorithm>
#include <string>

#include "embrank/error.hpp"
#include "embrank/union_find.hpp"

namespace embrank {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

BigNat arrangement_count(std::span<const std::size_t> block_degrees) {
  BigNat r = 1;
  std::size_t total = 0;
  for (auto d : block_degrees) {
    r *= static_cast<unsigned long>(d);
    total += d;
  }
  for (std::size_t j = 1; j + 2 <= block_degrees.size(); ++j) r *= static_cast<unsigned long>(total - j);
  return r;
}

CutvertexRanker::CutvertexRanker(Vertex v, std::vector<std::vector<Vertex>> block_neighbors)
    : v_(v), nbr_(std::move(block_neighbors)) {
  for (auto& b : nbr_) {
    if (b.empty()) throw Error(ErrorKind::MalformedInput, "block without edges at the cut vertex");
    std::sort(b.begin(), b.end());
  }
  std::sort(nbr_.begin(), nbr_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  offset_.push_back(0);
  for (std::size_t j = 0; j < nbr_.size(); ++j) {
    for (std::size_t i = 0; i < nbr_[j].size(); ++i) {
      lookup_.push_back({nbr_[j][i], block_.size()});
      block_.push_back(j);
      neighbor_.push_back(nbr_[j][i]);
    }
    offset_.push_back(block_.size());
  }
  std::sort(lookup_.begin(), lookup_.end());
  for (std::size_t i = 1; i < lookup_.size(); ++i)
    if (lookup_[i].first == lookup_[i - 1].first) throw Error(ErrorKind::MalformedInput, "neighbor in two blocks");
}

std::size_t CutvertexRanker::edge_of(Vertex w) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(w, std::size_t{0}));
  if (it == lookup_.end() || it->first != w)
    throw Error(ErrorKind::EmbeddingMismatch, "vertex " + std::to_string(w) + " is not a neighbor of " + std::to_string(v_));
  return it->second;
}

std::size_t CutvertexRanker::block_of(Vertex w) const { return block_[edge_of(w)]; }

std::vector<BigNat> CutvertexRanker::bounds() const {
  std::vector<BigNat> b;
  for (const auto& n : nbr_) b.push_back(static_cast<unsigned long>(n.size()));
  for (std::size_t j = 1; j + 2 <= nbr_.size(); ++j) b.push_back(static_cast<unsigned long>(degree() - j));
  return b;
}

BigNat CutvertexRanker::count() const {
  std::vector<std::size_t> deg;
  for (const auto& n : nbr_) deg.push_back(n.size());
  return arrangement_count(deg);
}

std::vector<BigNat> CutvertexRanker::flatten(const CutvertexTuple& t) const {
  std::vector<BigNat> out;
  for (auto x : t.c) out.push_back(static_cast<unsigned long>(x));
  for (auto x : t.d) out.push_back(static_cast<unsigned long>(x));
  return out;
}

CutvertexTuple CutvertexRanker::unflatten(std::span<const BigNat> values) const {
  std::size_t k = nbr_.size();
  if (values.size() != 2 * k - 2) throw Error(ErrorKind::BoundViolation, "cut vertex tuple has the wrong length");
  CutvertexTuple t;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || !values[i].fits_ulong_p()) throw Error(ErrorKind::BoundViolation, "cut vertex value out of range");
    (i < k ? t.c : t.d).push_back(values[i].get_ui());
  }
  return t;
}

namespace {

// Partial embeddings around the cut vertex while blocks 3..k are merged in.
// Edges live on circular lists; S holds the edge each selectable label
// refers to, S' the initial labelling.
class MergeState {
 public:
  MergeState(std::size_t delta, const std::vector<std::size_t>& block, std::vector<std::size_t> first,
             const std::vector<std::vector<std::size_t>>& lin)
      : delta_(delta), block_(block), first_(std::move(first)), next_(delta), prev_(delta), pos_(delta),
        uf_(first_.size()) {
    std::size_t k = first_.size();
    for (const auto& l : lin)
      for (std::size_t i = 0; i < l.size(); ++i) {
        std::size_t a = l[i], b = l[(i + 1) % l.size()];
        next_[a] = b;
        prev_[b] = a;
      }
    link(lin[0].back(), first_[1]);
    link(lin[1].back(), first_[0]);
    s_.reserve(delta);
    s_.insert(s_.end(), lin[0].begin(), lin[0].end());
    s_.insert(s_.end(), lin[1].begin(), lin[1].end());
    for (std::size_t j = 2; j < k; ++j) s_.insert(s_.end(), lin[j].begin() + 1, lin[j].end());
    for (std::size_t j = k; j-- > 2;) s_.push_back(first_[j]);
    frozen_pos_.resize(delta);
    for (std::size_t i = 0; i < delta; ++i) pos_[s_[i]] = frozen_pos_[s_[i]] = i;
    s_frozen_ = s_;
    uf_.unite(0, 1);
    anchor_ = first_[0];
  }

  std::size_t next(std::size_t e) const { return next_[e]; }
  std::size_t prev(std::size_t e) const { return prev_[e]; }
  std::size_t pos(std::size_t e) const { return pos_[e]; }
  std::size_t frozen_pos(std::size_t e) const { return frozen_pos_[e]; }

  // Merge block j (0-based, j >= 2) using label d.
  void step(std::size_t j, std::size_t d) {
    if (d + j - 1 >= delta_) throw Error(ErrorKind::BoundViolation, "d value out of range");
    std::size_t x = s_[d];
    std::size_t fj = first_[j];
    // the closing slot of block j leaves the selectable range now; its content
    // (first_j, or the edge that inherited first_j's gap) moves into the freed slot
    std::size_t rep = s_[delta_ + 1 - j];
    if (uf_.find(block_[x]) != uf_.find(j)) {
      // case 1: the partial embedding of block j goes right after x
      std::size_t y = next_[x], lp = prev_[fj];
      link(x, fj);
      link(lp, y);
      replace(x, rep);
      uf_.unite(block_[x], j);
    } else {
      // case 2: split the circle of block j at e_d around the region of B_2
      std::size_t ed = s_frozen_[d];
      std::size_t a_end = prev_[ed], b_end = prev_[fj];
      std::size_t estar = prev_[first_[1]];
      link(estar, fj);
      link(a_end, first_[1]);
      link(prev_[anchor_], ed);
      link(b_end, anchor_);
      anchor_ = ed;
      if (pos_[estar] == kNone) throw Error(ErrorKind::EmbeddingMismatch, "merge state lost the edge before first_2");
      replace(estar, rep);
      uf_.unite(0, j);
    }
  }

  // Counter-clockwise order of all edges starting at first_1.
  std::vector<std::size_t> order() const {
    std::vector<std::size_t> out;
    out.reserve(delta_);
    std::size_t e = first_[0];
    do {
      out.push_back(e);
      e = next_[e];
    } while (e != first_[0] && out.size() <= delta_);
    if (out.size() != delta_) throw Error(ErrorKind::EmbeddingMismatch, "merge produced a broken rotation");
    return out;
  }

 private:
  void link(std::size_t a, std::size_t b) {
    next_[a] = b;
    prev_[b] = a;
  }
  void replace(std::size_t old_edge, std::size_t new_edge) {
    std::size_t at = pos_[old_edge];
    s_[at] = new_edge;
    pos_[new_edge] = at;
    pos_[old_edge] = kNone;
  }

  std::size_t delta_;
  const std::vector<std::size_t>& block_;
  std::vector<std::size_t> first_;
  std::vector<std::size_t> next_, prev_, pos_, frozen_pos_, s_, s_frozen_;
  UnionFind uf_;
  std::size_t anchor_;  // B parts of case 2 go right before this edge
};

}  // namespace

std::vector<Vertex> CutvertexRanker::unrank(const CutvertexTuple& t, const std::vector<std::vector<Vertex>>& block_ccw) const {
  std::size_t k = nbr_.size();
  if (t.c.size() != k || t.d.size() + 2 != k || block_ccw.size() != k)
    throw Error(ErrorKind::BoundViolation, "cut vertex tuple has the wrong length");

  std::vector<std::size_t> first(k);
  std::vector<std::vector<std::size_t>> lin(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (t.c[j] >= nbr_[j].size()) throw Error(ErrorKind::BoundViolation, "c value out of range");
    if (block_ccw[j].size() != nbr_[j].size()) throw Error(ErrorKind::EmbeddingMismatch, "block rotation at the cut vertex has the wrong size");
    first[j] = offset_[j] + t.c[j];
    std::vector<std::size_t> cyc;
    for (Vertex w : block_ccw[j]) {
      std::size_t e = edge_of(w);
      if (block_[e] != j) throw Error(ErrorKind::EmbeddingMismatch, "block rotation mixes blocks");
      cyc.push_back(e);
    }
    auto at = std::find(cyc.begin(), cyc.end(), first[j]);
    if (at == cyc.end()) throw Error(ErrorKind::EmbeddingMismatch, "block rotation misses an edge");
    std::rotate(cyc.begin(), at, cyc.end());
    lin[j] = std::move(cyc);
  }

  MergeState state(degree(), block_, first, lin);
  for (std::size_t j = 2; j < k; ++j) state.step(j, t.d[j - 2]);
  std::vector<Vertex> out;
  for (std::size_t e : state.order()) out.push_back(neighbor_[e]);
  return out;
}

CutvertexTuple CutvertexRanker::rank(std::span<const Vertex> ccw) const {
  std::size_t k = nbr_.size(), delta = degree();
  if (ccw.size() != delta) throw Error(ErrorKind::EmbeddingMismatch, "rotation at the cut vertex has the wrong size");
  std::vector<std::size_t> cyc(delta);
  std::vector<char> seen(delta, 0);
  for (std::size_t i = 0; i < delta; ++i) {
    cyc[i] = edge_of(ccw[i]);
    if (seen[cyc[i]]) throw Error(ErrorKind::EmbeddingMismatch, "rotation repeats a neighbor");
    seen[cyc[i]] = 1;
  }

  // first_1: the first B_1 edge after the last B_2 edge, visiting from the
  // smallest B_1 edge.
  std::size_t p0 = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), offset_[0]) - cyc.begin());
  std::size_t last_b2 = 0;
  for (std::size_t i = 0; i < delta; ++i)
    if (block_[cyc[(p0 + i) % delta]] == 1) last_b2 = i;
  std::size_t q = 0;
  for (std::size_t i = 1; i <= delta; ++i) {
    std::size_t at = (p0 + last_b2 + i) % delta;
    if (block_[cyc[at]] == 0) {
      q = at;
      break;
    }
  }
  std::vector<std::size_t> vis(delta), vidx(delta), pred(delta);
  for (std::size_t i = 0; i < delta; ++i) {
    vis[i] = cyc[(q + i) % delta];
    vidx[vis[i]] = i;
  }
  for (std::size_t i = 0; i < delta; ++i) pred[vis[(i + 1) % delta]] = vis[i];

  std::vector<std::size_t> first(k, kNone);
  std::vector<std::vector<std::size_t>> lin(k);
  for (std::size_t e : vis) {
    std::size_t j = block_[e];
    if (first[j] == kNone) first[j] = e;
    lin[j].push_back(e);
  }
  CutvertexTuple out;
  for (std::size_t j = 0; j < k; ++j) out.c.push_back(first[j] - offset_[j]);

  // Replay the merges; each step's label is read off the target rotation.
  MergeState state(delta, block_, first, lin);
  std::size_t f2 = first[1];
  for (std::size_t j = 2; j < k; ++j) {
    std::size_t fj = first[j];
    std::size_t x = pred[fj];
    std::size_t d = kNone;
    if (x == state.prev(f2) && vidx[state.prev(fj)] > vidx[f2]) {
      // case 2: e_d is the first edge of the partial embedding past first_2
      std::size_t e = fj;
      for (std::size_t steps = 0; steps < delta && vidx[e] < vidx[f2]; ++steps) e = state.next(e);
      if (vidx[e] < vidx[f2]) throw Error(ErrorKind::EmbeddingMismatch, "blocks interleave around vertex " + std::to_string(v_));
      d = state.frozen_pos(e);
    } else {
      d = state.pos(x);
    }
    if (d == kNone || d + j - 1 >= delta)
      throw Error(ErrorKind::EmbeddingMismatch, "blocks interleave around vertex " + std::to_string(v_));
    state.step(j, d);
    out.d.push_back(d);
  }
  if (state.order() != vis) throw Error(ErrorKind::EmbeddingMismatch, "blocks interleave around vertex " + std::to_string(v_));
  return out;
}

}  // namespace embrank
