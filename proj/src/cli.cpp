#include "embrank/cli.hpp"

#include <fstream>
#include <memory>
#include <random>
#include <set>

#include "CLI11.hpp"
#include "embrank/codecs.hpp"
#include "embrank/error.hpp"
#include "embrank/json_io.hpp"
#include "embrank/oracle.hpp"
#include "embrank/rank_full.hpp"
#include "embrank/spqr.hpp"
#include "json.hpp"

namespace embrank {

namespace {

std::shared_ptr<const Graph> load_graph(const std::string& path) {
  return std::make_shared<const Graph>(parse_graph(read_file(path)));
}

std::string tuple_json(const EmbeddingRanker& ranker, const std::vector<BigNat>& values) {
  nlohmann::ordered_json doc;
  doc["bounds"] = nlohmann::ordered_json::array();
  doc["values"] = nlohmann::ordered_json::array();
  doc["segments"] = nlohmann::ordered_json::array();
  for (const auto& b : ranker.bounds()) doc["bounds"].push_back(to_decimal(b));
  for (const auto& v : values) doc["values"].push_back(to_decimal(v));
  for (const auto& s : ranker.segments()) doc["segments"].push_back({std::string(1, s.kind), s.begin, s.end});
  return doc.dump();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::MalformedInput, "cannot write " + path);
  f << text << '\n';
}

// Cross-checks the ranking against brute force on one small graph.
bool verify(const std::shared_ptr<const Graph>& g, std::ostream& out, std::ostream& err) {
  EmbeddingRanker ranker(g);
  auto expected = oracle::enumerate_embeddings(*g);
  BigNat count = ranker.count();
  bool ok = true;
  if (count != static_cast<unsigned long>(expected.size())) {
    err << "count " << to_decimal(count) << " but the oracle finds " << expected.size() << " embeddings\n";
    ok = false;
  }
  std::set<std::string> seen;
  for (BigNat r = 0; ok && r < count; ++r) {
    auto emb = ranker.unrank(r);
    auto diag = validate(emb);
    if (!diag.empty()) {
      err << "rank " << to_decimal(r) << " gives an invalid embedding: " << diag.front() << '\n';
      ok = false;
      break;
    }
    auto key = canonical_key(emb);
    if (!expected.count(key)) {
      err << "rank " << to_decimal(r) << " gives an embedding unknown to the oracle\n";
      ok = false;
    } else if (!seen.insert(key).second) {
      err << "rank " << to_decimal(r) << " repeats an embedding\n";
      ok = false;
    } else if (ranker.rank(emb) != r) {
      err << "rank " << to_decimal(r) << " does not round-trip\n";
      ok = false;
    }
  }
  if (ok) out << "ok " << to_decimal(count) << " embeddings\n";
  return ok;
}

void decompose(const Graph& g, std::ostream& out) {
  auto bct = biconnected_decomposition(g);
  for (std::size_t b = 0; b < bct.blocks.size(); ++b) {
    out << "block " << b << ':';
    for (const auto& e : bct.blocks[b].edges) out << ' ' << e.lo << '-' << e.hi;
    out << '\n';
  }
  for (std::size_t i = 0; i < bct.cut_vertices.size(); ++i) {
    out << "cut " << bct.cut_vertices[i] << ':';
    for (auto b : bct.arcs[i]) out << ' ' << b;
    out << '\n';
  }
  for (std::size_t b = 0; b < bct.blocks.size(); ++b) {
    out << "spqr " << b << '\n';
    out << build_spqr(bct.blocks[b].edges).dump();
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank, unrank, count and sample planar embeddings", "embrank"};
  app.require_subcommand(1);
  std::string graph_path, emb_path, output_path, rank_text, from_text = "0";
  bool with_tuple = false;
  std::uint64_t seed = 0, samples = 1, limit = 100;
  std::size_t max_n = 8;

  auto* rank_cmd = app.add_subcommand("rank", "Rank of an embedding");
  rank_cmd->add_option("-g,--graph", graph_path, "graph JSON")->required();
  rank_cmd->add_option("-e,--embedding", emb_path, "embedding JSON")->required();
  rank_cmd->add_flag("--tuple", with_tuple, "also print bounds and values");
  auto* unrank_cmd = app.add_subcommand("unrank", "Embedding with a given rank");
  unrank_cmd->add_option("-g,--graph", graph_path, "graph JSON")->required();
  unrank_cmd->add_option("-r,--rank", rank_text, "decimal rank")->required();
  unrank_cmd->add_option("-o,--output", output_path, "write the embedding here");
  auto* count_cmd = app.add_subcommand("count", "Number of embeddings");
  count_cmd->add_option("-g,--graph", graph_path, "graph JSON")->required();
  auto* sample_cmd = app.add_subcommand("sample", "Uniformly random embeddings");
  sample_cmd->add_option("-g,--graph", graph_path, "graph JSON")->required();
  sample_cmd->add_option("--seed", seed, "random seed")->required();
  sample_cmd->add_option("-k", samples, "number of samples");
  auto* enum_cmd = app.add_subcommand("enumerate", "Embeddings with consecutive ranks");
  enum_cmd->add_option("-g,--graph", graph_path, "graph JSON")->required();
  enum_cmd->add_option("--from", from_text, "first rank");
  enum_cmd->add_option("--limit", limit, "maximum number of embeddings");
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check against brute force");
  verify_cmd->add_option("-g,--graph", graph_path, "graph JSON")->required();
  verify_cmd->add_option("--max-n", max_n, "refuse graphs with more vertices");
  auto* decompose_cmd = app.add_subcommand("decompose", "Block-cut tree and SPQR trees");
  decompose_cmd->add_option("-g,--graph", graph_path, "graph JSON")->required();

  std::vector<const char*> argv{"embrank"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    auto g = load_graph(graph_path);
    if (*decompose_cmd) {
      decompose(*g, out);
      return kExitOk;
    }
    if (*verify_cmd) {
      if (g->num_vertices() > max_n) {
        err << "graph has " << g->num_vertices() << " vertices, above --max-n " << max_n << '\n';
        return kExitMalformed;
      }
      return verify(g, out, err) ? kExitOk : kExitVerifyFailed;
    }
    EmbeddingRanker ranker(g);
    if (*count_cmd) {
      out << to_decimal(ranker.count()) << '\n';
    } else if (*rank_cmd) {
      auto emb = parse_embedding(read_file(emb_path), g);
      auto values = ranker.phi(emb);
      out << to_decimal(tuple_rank(values, ranker.bounds())) << '\n';
      if (with_tuple) out << tuple_json(ranker, values) << '\n';
    } else if (*unrank_cmd) {
      write_output(output_path, embedding_to_json(ranker.unrank(parse_bignat(rank_text))), out);
    } else if (*sample_cmd) {
      std::mt19937_64 rng(seed);
      for (std::uint64_t i = 0; i < samples; ++i) out << embedding_to_json(ranker.sample(rng)) << '\n';
    } else if (*enum_cmd) {
      ranker.enumerate(parse_bignat(from_text), limit, [&](const BigNat& r, const PlanarEmbedding& emb) {
        out << "{\"rank\":\"" << to_decimal(r) << "\",\"embedding\":" << embedding_to_json(emb) << "}\n";
        return true;
      });
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::NotPlanar:
        return kExitNotPlanar;
      case ErrorKind::RankOutOfRange:
        return kExitRankOutOfRange;
      default:
        return kExitMalformed;
    }
  }
}

}  // namespace embrank
