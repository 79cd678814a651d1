#pragma once

#include <memory>
#include <string>

#include "embrank/embedding.hpp"
#include "embrank/graph.hpp"

namespace embrank {

// Graph documents: {"vertices": [1, ..., n], "edges": [[u, v], ...]}.
Graph parse_graph(const std::string& text);
std::string graph_to_json(const Graph& g);

// Embedding documents:
// {"rotations": {"v": [counter-clockwise neighbors]}, "nesting": [[parent, child, label], ...],
//  "face_tuple": [o_1, ..., o_c]}; parent 0 is the dummy root.
PlanarEmbedding parse_embedding(const std::string& text, std::shared_ptr<const Graph> graph);
// Single line, rotations starting at the smallest neighbor.
std::string embedding_to_json(const PlanarEmbedding& emb);

std::string read_file(const std::string& path);

}  // namespace embrank
