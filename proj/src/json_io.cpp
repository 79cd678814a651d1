#include "embrank/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "embrank/error.hpp"
#include "json.hpp"

namespace embrank {

using nlohmann::json;

namespace {

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

std::uint64_t as_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw Error(ErrorKind::MalformedInput, std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

Vertex as_vertex(const json& j, std::size_t n) {
  auto v = as_index(j, "vertex");
  if (v < 1 || v > n) throw Error(ErrorKind::MalformedInput, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return static_cast<Vertex>(v);
}

}  // namespace

Graph parse_graph(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") || !doc["vertices"].is_array() ||
      !doc["edges"].is_array())
    throw Error(ErrorKind::MalformedInput, "graph needs \"vertices\" and \"edges\" arrays");
  std::size_t n = doc["vertices"].size();
  std::vector<char> seen(n + 1, 0);
  for (const auto& v : doc["vertices"]) {
    Vertex x = as_vertex(v, n);
    if (seen[x]) throw Error(ErrorKind::MalformedInput, "vertex " + std::to_string(x) + " listed twice");
    seen[x] = 1;
  }
  std::vector<EdgeId> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::MalformedInput, "edges must be pairs");
    Vertex a = as_vertex(e[0], n), b = as_vertex(e[1], n);
    if (a == b) throw Error(ErrorKind::MalformedInput, "self-loop at vertex " + std::to_string(a));
    edges.push_back(make_edge(a, b));
  }
  return Graph(n, std::move(edges));
}

std::string graph_to_json(const Graph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (Vertex v = 1; v <= g.num_vertices(); ++v) doc["vertices"].push_back(v);
  doc["edges"] = json::array();
  for (const auto& e : g.edges()) doc["edges"].push_back({e.lo, e.hi});
  return doc.dump();
}

PlanarEmbedding parse_embedding(const std::string& text, std::shared_ptr<const Graph> graph) {
  json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("rotations") || !doc["rotations"].is_object())
    throw Error(ErrorKind::MalformedInput, "embedding needs a \"rotations\" object");
  std::size_t n = graph->num_vertices();
  PlanarEmbedding emb;
  emb.rotation = RotationSystem(n);
  for (const auto& [key, list] : doc["rotations"].items()) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || v < 1 || v > n) throw Error(ErrorKind::MalformedInput, "bad rotation key \"" + key + "\"");
    if (!list.is_array()) throw Error(ErrorKind::MalformedInput, "rotation of " + key + " must be an array");
    std::vector<Vertex> l;
    for (const auto& w : list) l.push_back(as_vertex(w, n));
    emb.rotation.set(static_cast<Vertex>(v), std::move(l));
  }
  std::size_t c = connected_components(*graph).size();
  emb.nesting.links.assign(c, {});
  std::vector<char> given(c + 1, 0);
  if (doc.contains("nesting")) {
    if (!doc["nesting"].is_array()) throw Error(ErrorKind::MalformedInput, "nesting must be an array");
    for (const auto& t : doc["nesting"]) {
      if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::MalformedInput, "nesting entries are [parent, child, label]");
      auto parent = as_index(t[0], "parent"), child = as_index(t[1], "child"), label = as_index(t[2], "label");
      if (child < 1 || child > c || parent > c) throw Error(ErrorKind::MalformedInput, "nesting refers to a missing component");
      if (given[child]) throw Error(ErrorKind::MalformedInput, "component " + std::to_string(child) + " nested twice");
      given[child] = 1;
      emb.nesting.links[child - 1] = {parent, label};
    }
  }
  if (c > 1)
    for (std::size_t h = 1; h <= c; ++h)
      if (!given[h]) throw Error(ErrorKind::MalformedInput, "nesting misses component " + std::to_string(h));
  if (doc.contains("face_tuple")) {
    if (!doc["face_tuple"].is_array()) throw Error(ErrorKind::MalformedInput, "face_tuple must be an array");
    for (const auto& o : doc["face_tuple"]) emb.face_tuple.push_back(as_index(o, "face"));
  }
  emb.graph = std::move(graph);
  return emb;
}

std::string embedding_to_json(const PlanarEmbedding& emb) {
  // ordered_json keeps vertices in numeric order
  nlohmann::ordered_json doc;
  RotationSystem rot = emb.rotation;
  rot.canonicalize();
  doc["rotations"] = nlohmann::ordered_json::object();
  for (Vertex v = 1; v <= rot.num_vertices(); ++v) {
    auto l = rot.around(v);
    doc["rotations"][std::to_string(v)] = std::vector<Vertex>(l.begin(), l.end());
  }
  doc["nesting"] = nlohmann::ordered_json::array();
  for (std::size_t h = 1; h <= emb.nesting.size(); ++h)
    doc["nesting"].push_back({emb.nesting.of(h).parent, h, emb.nesting.of(h).label});
  doc["face_tuple"] = emb.face_tuple;
  return doc.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace embrank
