// Acceptance suite: one PASS/FAIL line per criterion; exit code 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "embrank/codecs.hpp"
#include "embrank/error.hpp"
#include "embrank/oracle.hpp"
#include "embrank/rank_biconnected.hpp"
#include "embrank/rank_cutvertex.hpp"
#include "embrank/rank_full.hpp"
#include "embrank/rank_nesting.hpp"
#include "generators.hpp"

using namespace embrank;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::vector<BigNat> nats(std::initializer_list<unsigned long> xs) {
  std::vector<BigNat> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

bool biconnected(const Graph& g) {
  if (g.num_vertices() < 3 || connected_components(g).size() != 1) return false;
  return biconnected_decomposition(g).blocks.size() == 1;
}

Outcome mixed_radix() {
  auto values = nats({0, 11, 1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 2, 1, 6, 1, 4, 5, 0, 1});
  auto bounds = nats({17, 17, 17, 2, 9, 8, 1, 2, 3, 1, 2, 2, 2, 4, 9, 8, 7, 2, 6, 6, 2, 2});
  BigNat r = tuple_rank(values, bounds);
  BigNat total = bounds_product(bounds);
  Outcome o;
  o.pass = r == parse_bignat("754705812645") && total == parse_bignat("19716667342848") &&
           tuple_unrank(r, bounds) == values;
  o.detail = "rank " + to_decimal(r) + ", product " + to_decimal(total);
  return o;
}

Outcome prufer() {
  RootedTree t;
  t.n = 6;
  t.root = 5;
  t.edges = {{1, 3}, {1, 5}, {2, 4}, {4, 5}, {4, 6}};
  auto seq = prufer_rank(t);
  auto back = prufer_unrank(seq);
  Outcome o;
  o.pass = seq == std::vector<Vertex>{4, 1, 5, 4, 5} && back.root == t.root && back.edges == t.edges;
  std::ostringstream s;
  for (std::size_t i = 0; i < seq.size(); ++i) s << (i ? "," : "") << seq[i];
  o.detail = "sequence " + s.str();
  return o;
}

Outcome nesting_example() {
  FaceIntervals iv({4, 3, 5, 5, 3});
  std::vector<std::size_t> tau{10, 3, 0, 13};
  auto pre = nesting_tuple_preprocess(tau, iv);
  auto tree = nesting_decode(tau, iv);
  Outcome o;
  o.pass = pre.parents == std::vector<std::size_t>{4, 1, 0, 4} && nesting_encode(tree) == tau;
  // a spread of further tuples over the label range roundtrips
  std::size_t checked = 0;
  std::vector<std::size_t> t(4, 0);
  for (std::size_t a = 0; a <= 15 && o.pass; ++a)
    for (std::size_t b = 0; b <= 15 && o.pass; b += 3)
      for (std::size_t c = 0; c <= 15 && o.pass; c += 5) {
        t = {a, b, c, (a + b + c) % 16};
        o.pass = nesting_encode(nesting_decode(t, iv)) == t;
        ++checked;
      }
  std::ostringstream s;
  s << "tau' = <" << pre.parents[0] << ',' << pre.parents[1] << ',' << pre.parents[2] << ',' << pre.parents[3]
    << ">, " << checked << " extra roundtrips";
  o.detail = s.str();
  return o;
}

Outcome arrangements() {
  std::vector<Graph> catalog;
  for (const auto& ng : testing::curated_graphs()) catalog.push_back(ng.graph);
  std::mt19937_64 rng(4);
  for (std::size_t i = 0; i < 40; ++i) {
    std::size_t n = 5 + i % 5;
    catalog.push_back(testing::random_planar_graph(n, n + rng() % 3, rng));
  }
  Outcome o;
  std::size_t graphs = 0, configs = 0;
  for (const auto& g : catalog) {
    EmbeddingRanker ranker(g);
    if (ranker.cutvertex_rankers().empty()) continue;
    bool used = false;
    // a few block embeddings per graph, each giving its own configuration
    for (int trial = 0; trial < 3; ++trial) {
      auto emb = ranker.sample(rng);
      for (const auto& cr : ranker.cutvertex_rankers()) {
        if (cr.degree() > 8) continue;
        std::vector<std::vector<Vertex>> block_ccw(cr.num_blocks());
        std::vector<std::size_t> degrees;
        for (Vertex w : emb.rotation.around(cr.vertex())) block_ccw[cr.block_of(w)].push_back(w);
        for (const auto& b : block_ccw) degrees.push_back(b.size());
        auto expected = oracle::enumerate_arrangements(block_ccw);
        BigNat e_v = arrangement_count(degrees);
        if (BigNat(static_cast<unsigned long>(expected.size())) != e_v || cr.count() != e_v) {
          o.pass = false;
          o.detail = "mismatch at vertex " + std::to_string(cr.vertex());
          return o;
        }
        ++configs;
        used = true;
      }
    }
    graphs += used;
  }
  o.pass = graphs >= 30;
  o.detail = std::to_string(configs) + " configurations from " + std::to_string(graphs) + " graphs";
  return o;
}

// Unranks every embedding, checks rank(unrank(r)) = r and compares the set with the oracle.
bool exhaustive_bijection(const Graph& g, std::string& why) {
  EmbeddingRanker ranker(g);
  auto expected = oracle::enumerate_embeddings(g);
  BigNat count = ranker.count();
  if (count != BigNat(static_cast<unsigned long>(expected.size()))) {
    why = "count " + to_decimal(count) + " vs oracle " + std::to_string(expected.size());
    return false;
  }
  std::set<std::string> seen;
  bool ok = true;
  ranker.enumerate(0, expected.size(), [&](const BigNat& r, const PlanarEmbedding& emb) {
    if (ranker.rank(emb) != r) {
      why = "rank mismatch at " + to_decimal(r);
      ok = false;
    }
    seen.insert(canonical_key(emb));
    return ok;
  });
  if (ok && seen != expected) {
    why = "embedding set differs from oracle";
    ok = false;
  }
  return ok;
}

Outcome full_bijection() {
  std::vector<Graph> corpus;
  for (std::size_t n = 2; n <= 6; ++n)
    for (auto& g : testing::all_planar_graphs(n)) corpus.push_back(std::move(g));
  for (const auto& ng : testing::curated_graphs())
    if (ng.graph.num_vertices() <= 6) corpus.push_back(ng.graph);
  std::mt19937_64 rng(5);

  Outcome o;
  std::size_t embeddings = 0;
  for (const auto& g : corpus) {
    std::string why;
    if (!exhaustive_bijection(g, why)) {
      o.pass = false;
      o.detail = why + " on a graph with " + std::to_string(g.num_vertices()) + " vertices";
      return o;
    }
    embeddings += EmbeddingRanker(g).count().get_ui();
  }

  std::size_t random_checks = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    std::size_t n = 2 + rng() % 9;
    Graph g = testing::random_planar_graph(n, n - 1 + rng() % (2 * n), rng);
    EmbeddingRanker ranker(g);
    for (int k = 0; k < 50; ++k) {
      BigNat r = uniform_below(ranker.count(), rng);
      auto emb = ranker.unrank(r);
      if (!validate(emb).empty() || ranker.rank(emb) != r) {
        o.pass = false;
        o.detail = "random roundtrip failed at rank " + to_decimal(r);
        return o;
      }
      ++random_checks;
    }
  }
  o.detail = std::to_string(corpus.size()) + " corpus graphs (" + std::to_string(embeddings) + " embeddings), " +
             std::to_string(random_checks) + " random roundtrips";
  return o;
}

Outcome biconnected_counts() {
  std::vector<Graph> corpus;
  for (std::size_t n = 3; n <= 5; ++n)
    for (auto& g : testing::all_planar_graphs(n))
      if (biconnected(g)) corpus.push_back(std::move(g));
  for (const auto& ng : testing::curated_graphs())
    if (biconnected(ng.graph) && ng.graph.num_vertices() <= 7) corpus.push_back(ng.graph);
  // the oracle costs milliseconds per graph from n = 6 on, so larger graphs are sampled
  std::vector<Graph> six;
  for (auto& g : testing::all_planar_graphs(6))
    if (biconnected(g)) six.push_back(std::move(g));
  std::mt19937_64 rng(6);
  std::shuffle(six.begin(), six.end(), rng);
  six.resize(std::min<std::size_t>(six.size(), 2500));
  for (auto& g : six) corpus.push_back(std::move(g));
  for (int i = 0; i < 80; ++i) corpus.push_back(testing::random_biconnected_planar_graph(7, rng));
  Outcome o;
  for (const auto& g : corpus) {
    BlockRanker br(g.edges());
    auto rotations = oracle::enumerate_connected(g);
    if (br.count() != BigNat(static_cast<unsigned long>(rotations.size()))) {
      o.pass = false;
      o.detail = "count " + to_decimal(br.count()) + " vs oracle " + std::to_string(rotations.size());
      return o;
    }
  }
  o.detail = std::to_string(corpus.size()) + " biconnected graphs";
  return o;
}

Outcome uniform_sampling() {
  EmbeddingRanker ranker(testing::curated("triangle_pendant"));
  std::size_t k = ranker.count().get_ui();
  std::map<std::string, std::size_t> index;
  for (std::size_t r = 0; r < k; ++r) index[canonical_key(ranker.unrank(static_cast<unsigned long>(r)))] = r;
  std::vector<double> observed(k, 0);
  std::mt19937_64 rng(7);
  const std::size_t samples = 20000;
  for (std::size_t i = 0; i < samples; ++i) observed[index.at(canonical_key(ranker.sample(rng)))] += 1;
  double expected = static_cast<double>(samples) / static_cast<double>(k);
  double stat = 0;
  for (double x : observed) stat += (x - expected) * (x - expected) / expected;
  boost::math::chi_squared dist(static_cast<double>(k - 1));
  double p = boost::math::cdf(boost::math::complement(dist, stat));
  Outcome o;
  o.pass = index.size() == k && p > 0.001;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu embeddings, chi2 = %.3f, p = %.4f", k, stat, p);
  o.detail = buf;
  return o;
}

Outcome permutations() {
  Outcome o;
  for (std::size_t k = 0; k <= 10; ++k) {
    std::vector<std::size_t> id(k);
    std::iota(id.begin(), id.end(), 0);
    if (perm_rank(id) != 0 || perm_unrank(0, k) != id) o.pass = false;
  }
  std::size_t total = 0;
  for (std::size_t k = 1; k <= 7; ++k) {
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<char> hit(factorial(k).get_ui(), 0);
    do {
      BigNat r = perm_rank(sigma);
      std::size_t x = r.get_ui();
      if (r >= factorial(k) || hit[x] || perm_unrank(r, k) != sigma) o.pass = false;
      if (x < hit.size()) hit[x] = 1;
      ++total;
    } while (std::next_permutation(sigma.begin(), sigma.end()) && o.pass);
  }
  o.detail = std::to_string(total) + " permutations checked";
  return o;
}

Outcome scaling() {
  std::mt19937_64 rng(9);
  Graph g = testing::large_planar_graph(100000, rng);
  EmbeddingRanker ranker(g);
  BigNat r = uniform_below(ranker.count(), rng);
  auto emb = ranker.unrank(r);
  Outcome o;
  o.pass = ranker.rank(emb) == r;
  o.detail = std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) + " edges, " +
             std::to_string(mpz_sizeinbase(ranker.count().get_mpz_t(), 10)) + "-digit count";
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "mixed-radix reference tuple", 0.001, mixed_radix},
      {2, "Pruefer reference tree", 0.001, prufer},
      {3, "nesting preprocessing reference", 0.001, nesting_example},
      {4, "cut vertex arrangement count", 60, arrangements},
      {5, "full bijection", 300, full_bijection},
      {6, "biconnected count", 60, biconnected_counts},
      {7, "uniform sampling", 30, uniform_sampling},
      {8, "permutation codec", 10, permutations},
      {9, "scaling 1e5 vertices", 10, scaling},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.time_limit_s;
    bool pass = o.pass && in_time;
    all = all && pass;
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.4f s, limit %g s", secs, c.time_limit_s);
    std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << " " << c.name << ": " << o.detail << " ("
              << timing << (in_time ? "" : ", too slow") << ")\n";
  }
  return all ? 0 : 1;
}
