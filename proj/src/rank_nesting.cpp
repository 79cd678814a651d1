#include "embrank/rank_nesting.hpp"

#include <functional>
#include <queue>
#include <string>

#include "embrank/codecs.hpp"
#include "embrank/error.hpp"

namespace embrank {

namespace {
using MinHeap = std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>>;
}

std::size_t inner_face(const FaceIntervals& intervals, std::size_t h, std::size_t outer, std::size_t label) {
  if (label < intervals.lo(h) || label > intervals.hi(h))
    throw Error(ErrorKind::LabelOutOfRange, "label " + std::to_string(label) + " is not an inner face of component " + std::to_string(h));
  std::size_t idx = label - intervals.lo(h);
  return idx < outer ? idx : idx + 1;
}

std::size_t inner_label(const FaceIntervals& intervals, std::size_t h, std::size_t outer, std::size_t face) {
  if (face == outer || face >= intervals.face_count(h))
    throw Error(ErrorKind::UnknownFace, "face " + std::to_string(face) + " is not an inner face of component " + std::to_string(h));
  return intervals.lo(h) + (face < outer ? face : face - 1);
}

std::vector<std::size_t> nesting_encode(const NestingTree& tree) {
  std::size_t c = tree.size();
  if (c < 2) return {};
  std::vector<std::size_t> children(c + 1, 0);
  for (const auto& l : tree.links) {
    if (l.parent > c) throw Error(ErrorKind::MalformedTree, "nesting parent out of range");
    ++children[l.parent];
  }
  MinHeap leaves;
  for (std::size_t h = 1; h <= c; ++h)
    if (children[h] == 0) leaves.push(h);
  std::vector<std::size_t> out;
  out.reserve(c - 1);
  while (out.size() + 1 < c) {
    if (leaves.empty()) throw Error(ErrorKind::MalformedTree, "nesting tree has a cycle");
    std::size_t h = leaves.top();
    leaves.pop();
    const auto& l = tree.of(h);
    out.push_back(l.label);
    if (l.parent != 0 && --children[l.parent] == 0) leaves.push(l.parent);
  }
  return out;
}

NestingTree nesting_decode(std::span<const std::size_t> tau, const FaceIntervals& intervals) {
  std::size_t c = intervals.components();
  NestingTree tree;
  tree.links.resize(c);
  if (c == 0) return tree;
  if (tau.size() + 1 != c) throw Error(ErrorKind::MalformedTree, "nesting tuple needs " + std::to_string(c - 1) + " labels");
  auto pre = nesting_tuple_preprocess(tau, intervals);
  auto& deg = pre.degrees;
  MinHeap leaves;
  for (std::size_t h = 1; h <= c; ++h)
    if (deg[h] == 1) leaves.push(h);
  for (std::size_t i = 0; i < tau.size(); ++i) {
    std::size_t h = leaves.top();
    leaves.pop();
    std::size_t p = pre.parents[i];
    tree.links[h - 1] = {p, tau[i]};
    deg[h] = 0;
    if (--deg[p] == 1 && p != 0) leaves.push(p);
  }
  tree.links[leaves.top() - 1] = {0, 0};
  return tree;
}

NestingPlacement digamma(const PlanarEmbedding& emb) {
  if (!emb.graph) throw Error(ErrorKind::MalformedInput, "embedding has no graph");
  FaceIntervals intervals(face_counts(*emb.graph));
  if (emb.nesting.size() != intervals.components() || emb.face_tuple.size() != intervals.components())
    throw Error(ErrorKind::MalformedTree, "nesting data does not match the components");
  for (std::size_t h = 1; h <= intervals.components(); ++h) {
    const auto& l = emb.nesting.of(h);
    if (emb.face_tuple[h - 1] >= intervals.face_count(h)) throw Error(ErrorKind::UnknownFace, "outer face out of range");
    if (l.parent == 0 ? l.label != 0 : (l.parent > intervals.components() || intervals.owner(l.label) != l.parent))
      throw Error(ErrorKind::LabelOutOfRange, "component " + std::to_string(h) + " has a label outside its parent's faces");
  }
  return {emb.nesting, emb.face_tuple};
}

PlanarEmbedding digamma_inverse(const NestingPlacement& placement, std::shared_ptr<const Graph> graph, RotationSystem rotation) {
  PlanarEmbedding emb{std::move(graph), std::move(rotation), placement.tree, placement.face_tuple};
  digamma(emb);
  return emb;
}

NestingRanker::NestingRanker(std::vector<std::size_t> face_counts) : intervals_(std::move(face_counts)) {}

std::vector<BigNat> NestingRanker::bounds() const {
  std::vector<BigNat> b;
  std::size_t c = intervals_.components();
  for (std::size_t i = 1; i < c; ++i) b.push_back(static_cast<unsigned long>(intervals_.total_inner() + 1));
  for (std::size_t h = 1; h <= c; ++h) b.push_back(static_cast<unsigned long>(intervals_.face_count(h)));
  return b;
}

BigNat NestingRanker::count() const { return bounds_product(bounds()); }

std::vector<BigNat> NestingRanker::rank(const NestingPlacement& placement) const {
  std::vector<BigNat> out;
  for (auto x : nesting_encode(placement.tree)) out.push_back(static_cast<unsigned long>(x));
  for (auto o : placement.face_tuple) out.push_back(static_cast<unsigned long>(o));
  return out;
}

NestingPlacement NestingRanker::unrank(std::span<const BigNat> values) const {
  std::size_t c = intervals_.components();
  auto b = bounds();
  if (values.size() != b.size()) throw Error(ErrorKind::BoundViolation, "nesting segment has the wrong length");
  for (std::size_t i = 0; i < b.size(); ++i)
    if (values[i] < 0 || values[i] >= b[i]) throw Error(ErrorKind::BoundViolation, "nesting value out of range");
  std::vector<std::size_t> tau;
  for (std::size_t i = 0; i + 1 < c; ++i) tau.push_back(values[i].get_ui());
  NestingPlacement p;
  p.tree = nesting_decode(tau, intervals_);
  for (std::size_t h = 0; h < c; ++h) p.face_tuple.push_back(values[c - 1 + h].get_ui());
  return p;
}

}  // namespace embrank
