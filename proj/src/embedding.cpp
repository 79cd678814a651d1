#include "embrank/embedding.hpp"

#include <algorithm>
#include <string>

#include "embrank/error.hpp"

namespace embrank {

void RotationSystem::canonicalize() {
  for (auto& l : ccw_) {
    if (l.empty()) continue;
    std::rotate(l.begin(), std::min_element(l.begin(), l.end()), l.end());
  }
}

RotationSystem RotationSystem::mirrored() const {
  RotationSystem r = *this;
  for (auto& l : r.ccw_) std::reverse(l.begin(), l.end());
  r.canonicalize();
  return r;
}

RotationIndex::RotationIndex(const Graph& g, const RotationSystem& rot) : g_(&g) {
  std::size_t n = g.num_vertices();
  offset_.assign(n + 2, 0);
  for (Vertex v = 1; v <= n; ++v) offset_[v + 1] = offset_[v] + g.degree(v);
  pos_.resize(offset_[n + 1]);
  for (Vertex v = 1; v <= n; ++v) {
    auto l = rot.around(v);
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < l.size(); ++i) {
      auto it = std::lower_bound(nb.begin(), nb.end(), l[i]);
      pos_[offset_[v] + static_cast<std::size_t>(it - nb.begin())] = static_cast<std::uint32_t>(i);
    }
  }
}

std::size_t RotationIndex::position(Vertex v, Vertex w) const {
  auto nb = g_->neighbors(v);
  auto it = std::lower_bound(nb.begin(), nb.end(), w);
  return pos_[offset_[v] + static_cast<std::size_t>(it - nb.begin())];
}

std::vector<std::size_t> face_counts(const Graph& g) {
  std::vector<std::size_t> out;
  for (const auto& c : connected_components(g)) out.push_back(c.edges.size() + 2 - c.vertices.size());
  return out;
}

FaceTrace trace_faces(const Graph& g, const RotationSystem& rot) {
  std::size_t n = g.num_vertices();
  auto comps = connected_components(g);
  std::vector<std::size_t> comp_of(n + 1, 0);
  for (const auto& c : comps)
    for (Vertex v : c.vertices) comp_of[v] = c.id;

  RotationIndex index(g, rot);
  std::vector<std::size_t> offset(n + 2, 0);
  for (Vertex v = 1; v <= n; ++v) offset[v + 1] = offset[v] + g.degree(v);
  std::vector<char> used(offset[n + 1], 0);

  FaceTrace out;
  out.per_component.resize(comps.size());
  for (Vertex s = 1; s <= n; ++s) {
    auto ls = rot.around(s);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (used[offset[s] + i]) continue;
      TracedFace f;
      Vertex u = s;
      std::size_t k = i;
      EdgeId best{};
      bool have = false;
      while (!used[offset[u] + k]) {
        used[offset[u] + k] = 1;
        Vertex v = rot.around(u)[k];
        f.boundary.push_back({u, v});
        EdgeId e = make_edge(u, v);
        if (!have || e < best) {
          best = e;
          have = true;
        }
        std::size_t deg = rot.around(v).size();
        std::size_t j = index.position(v, u);
        k = (j + deg - 1) % deg;
        u = v;
      }
      bool low_to_high = false, high_to_low = false;
      for (auto d : f.boundary) {
        if (d.from == best.lo && d.to == best.hi) low_to_high = true;
        if (d.from == best.hi && d.to == best.lo) high_to_low = true;
      }
      f.label.component = comp_of[s];
      f.label.edge = best;
      f.label.side = (low_to_high && !high_to_low) ? 1 : 0;
      out.per_component[comp_of[s] - 1].push_back(std::move(f));
    }
  }
  for (auto& faces : out.per_component)
    std::sort(faces.begin(), faces.end(), [](const TracedFace& a, const TracedFace& b) { return a.label < b.label; });
  return out;
}

std::vector<std::string> rotation_diagnostics(const Graph& g, const RotationSystem& rot) {
  std::vector<std::string> out;
  if (rot.num_vertices() != g.num_vertices()) {
    out.push_back("rotation covers " + std::to_string(rot.num_vertices()) + " vertices, graph has " +
                  std::to_string(g.num_vertices()));
    return out;
  }
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    std::vector<Vertex> l(rot.around(v).begin(), rot.around(v).end());
    std::sort(l.begin(), l.end());
    auto nb = g.neighbors(v);
    if (!std::equal(l.begin(), l.end(), nb.begin(), nb.end()))
      out.push_back("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbors");
  }
  return out;
}

namespace {

std::vector<std::string> nesting_diagnostics(const NestingTree& tree, const FaceIntervals& intervals) {
  std::vector<std::string> out;
  std::size_t c = intervals.components();
  if (tree.size() != c) {
    out.push_back("nesting tree has " + std::to_string(tree.size()) + " components, graph has " + std::to_string(c));
    return out;
  }
  for (std::size_t i = 1; i <= c; ++i) {
    const auto& link = tree.of(i);
    std::string who = "component " + std::to_string(i);
    if (link.parent > c || link.parent == i) {
      out.push_back(who + " has invalid parent " + std::to_string(link.parent));
    } else if (link.parent == 0) {
      if (link.label != 0) out.push_back(who + " hangs from the root with nonzero label");
    } else if (link.label < intervals.lo(link.parent) || link.label > intervals.hi(link.parent)) {
      out.push_back(who + " has label " + std::to_string(link.label) + " outside the interval of component " +
                    std::to_string(link.parent));
    }
  }
  if (!out.empty()) return out;
  // 0 = unvisited, 1 = on current walk, 2 = reaches the root.
  std::vector<char> state(c + 1, 0);
  state[0] = 2;
  for (std::size_t i = 1; i <= c; ++i) {
    std::vector<std::size_t> walk;
    std::size_t x = i;
    while (state[x] == 0) {
      state[x] = 1;
      walk.push_back(x);
      x = tree.of(x).parent;
    }
    if (state[x] == 1) {
      out.push_back("nesting tree has a cycle through component " + std::to_string(x));
      return out;
    }
    for (auto w : walk) state[w] = 2;
  }
  return out;
}

}  // namespace

std::vector<std::string> validate(const PlanarEmbedding& emb) {
  std::vector<std::string> out;
  if (!emb.graph) return {"embedding has no graph"};
  const Graph& g = *emb.graph;
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    if (g.degree(v) == 0) out.push_back("vertex " + std::to_string(v) + " is isolated");
  if (!out.empty()) return out;

  out = rotation_diagnostics(g, emb.rotation);
  auto comps = connected_components(g);
  auto counts = face_counts(g);
  if (out.empty()) {
    auto trace = trace_faces(g, emb.rotation);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      std::size_t f = trace.per_component[i].size();
      if (f != counts[i])
        out.push_back("component " + std::to_string(i + 1) + " has " + std::to_string(f) + " faces, Euler requires " +
                      std::to_string(counts[i]));
    }
  }
  FaceIntervals intervals(counts);
  auto nd = nesting_diagnostics(emb.nesting, intervals);
  out.insert(out.end(), nd.begin(), nd.end());
  if (emb.face_tuple.size() != comps.size()) {
    out.push_back("face tuple has " + std::to_string(emb.face_tuple.size()) + " entries, graph has " +
                  std::to_string(comps.size()) + " components");
  } else {
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (emb.face_tuple[i] >= counts[i])
        out.push_back("face tuple entry " + std::to_string(i + 1) + " = " + std::to_string(emb.face_tuple[i]) +
                      " not below " + std::to_string(counts[i]));
  }
  return out;
}

std::vector<TracedFace> face_identifiers(const PlanarEmbedding& emb, std::size_t component) {
  auto trace = trace_faces(*emb.graph, emb.rotation);
  if (component < 1 || component > trace.per_component.size())
    throw Error(ErrorKind::IndexOutOfRange, "no component " + std::to_string(component));
  return std::move(trace.per_component[component - 1]);
}

PlaneEmbedding project_to_plane(const PlanarEmbedding& emb, std::size_t component, std::size_t outer_face) {
  auto faces = face_identifiers(emb, component);
  if (outer_face >= faces.size())
    throw Error(ErrorKind::UnknownFace, "component " + std::to_string(component) + " has " +
                                            std::to_string(faces.size()) + " faces");
  return {&emb, component, outer_face};
}

bool embeddings_equal(const PlanarEmbedding& a, const PlanarEmbedding& b) {
  if (a.graph != b.graph && !(a.graph && b.graph && *a.graph == *b.graph))
    throw Error(ErrorKind::GraphMismatch, "embeddings of different graphs");
  RotationSystem ra = a.rotation, rb = b.rotation;
  ra.canonicalize();
  rb.canonicalize();
  return ra == rb && a.nesting == b.nesting && a.face_tuple == b.face_tuple;
}

std::string canonical_key(const RotationSystem& rot, const NestingTree& tree, std::span<const std::size_t> face_tuple) {
  RotationSystem r = rot;
  r.canonicalize();
  std::string s;
  for (Vertex v = 1; v <= r.num_vertices(); ++v) {
    for (Vertex w : r.around(v)) {
      s += std::to_string(w);
      s += ',';
    }
    s += ';';
  }
  s += '|';
  for (const auto& l : tree.links) {
    s += std::to_string(l.parent) + ':' + std::to_string(l.label) + ',';
  }
  s += '|';
  for (auto o : face_tuple) s += std::to_string(o) + ',';
  return s;
}

std::string canonical_key(const PlanarEmbedding& emb) { return canonical_key(emb.rotation, emb.nesting, emb.face_tuple); }

}  // namespace embrank
