#include "embrank/codecs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "embrank/error.hpp"

namespace embrank {

FaceIntervals::FaceIntervals(std::vector<std::size_t> face_counts) : counts_(std::move(face_counts)) {
  start_.resize(counts_.size() + 1);
  std::size_t next = 1;
  for (std::size_t h = 0; h < counts_.size(); ++h) {
    if (counts_[h] == 0) throw Error(ErrorKind::EdgelessComponent, "component with no face");
    start_[h] = next;
    next += counts_[h] - 1;
  }
  start_[counts_.size()] = next;
}

std::size_t FaceIntervals::owner(std::size_t label) const {
  if (label == 0) return 0;
  if (label > total_inner())
    throw Error(ErrorKind::LabelOutOfRange, "label " + std::to_string(label) + " > " + std::to_string(total_inner()));
  // First component whose interval end reaches the label.
  auto it = std::upper_bound(start_.begin() + 1, start_.end(), label);
  return static_cast<std::size_t>(it - start_.begin());
}

BigNat bounds_product(std::span<const BigNat> bounds) {
  BigNat p = 1;
  for (const auto& b : bounds) p *= b;
  return p;
}

BigNat tuple_rank(std::span<const BigNat> values, std::span<const BigNat> bounds) {
  if (values.size() != bounds.size())
    throw Error(ErrorKind::BoundViolation, "tuple has " + std::to_string(values.size()) + " values for " +
                                               std::to_string(bounds.size()) + " bounds");
  BigNat r = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] >= bounds[i])
      throw Error(ErrorKind::BoundViolation, "element " + std::to_string(i) + " = " + to_decimal(values[i]) +
                                                 " not below " + to_decimal(bounds[i]));
    r *= bounds[i];
    r += values[i];
  }
  return r;
}

std::vector<BigNat> tuple_unrank(const BigNat& rank, std::span<const BigNat> bounds) {
  if (rank < 0 || rank >= bounds_product(bounds))
    throw Error(ErrorKind::RankOutOfRange, to_decimal(rank) + " not below " + to_decimal(bounds_product(bounds)));
  std::vector<BigNat> values(bounds.size());
  BigNat r = rank;
  for (std::size_t i = bounds.size(); i-- > 0;) {
    mpz_fdiv_qr(r.get_mpz_t(), values[i].get_mpz_t(), r.get_mpz_t(), bounds[i].get_mpz_t());
  }
  return values;
}

namespace {

void check_permutation(std::span<const std::size_t> sigma) {
  std::vector<char> seen(sigma.size(), 0);
  for (std::size_t x : sigma) {
    if (x >= sigma.size() || seen[x]) throw Error(ErrorKind::NotAPermutation, "not a permutation of 0..k-1");
    seen[x] = 1;
  }
}

}  // namespace

BigNat perm_rank_raw(std::span<const std::size_t> sigma) {
  check_permutation(sigma);
  std::size_t k = sigma.size();
  std::vector<std::size_t> pi(sigma.begin(), sigma.end()), inv(k);
  for (std::size_t i = 0; i < k; ++i) inv[pi[i]] = i;
  std::vector<std::size_t> digit(k + 1, 0);
  for (std::size_t n = k; n >= 2; --n) {
    std::size_t s = pi[n - 1];
    digit[n] = s;
    std::swap(pi[n - 1], pi[inv[n - 1]]);
    std::swap(inv[s], inv[n - 1]);
  }
  BigNat r = 0;
  for (std::size_t n = 2; n <= k; ++n) {
    r *= static_cast<unsigned long>(n);
    r += static_cast<unsigned long>(digit[n]);
  }
  return r;
}

std::vector<std::size_t> perm_unrank_raw(const BigNat& rank, std::size_t k) {
  if (rank < 0 || rank >= factorial(k))
    throw Error(ErrorKind::RankOutOfRange, to_decimal(rank) + " not below " + std::to_string(k) + "!");
  std::vector<std::size_t> pi(k);
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  BigNat r = rank;
  for (std::size_t n = k; n >= 1; --n) {
    unsigned long s = mpz_fdiv_q_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n));
    std::swap(pi[n - 1], pi[s]);
  }
  return pi;
}

BigNat perm_rank(std::span<const std::size_t> sigma) {
  check_permutation(sigma);
  auto rho = perm_unrank_raw(0, sigma.size());
  std::vector<std::size_t> composed(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) composed[i] = sigma[rho[i]];
  return perm_rank_raw(composed);
}

std::vector<std::size_t> perm_unrank(const BigNat& rank, std::size_t k) {
  auto raw = perm_unrank_raw(rank, k);
  auto rho = perm_unrank_raw(0, k);
  std::vector<std::size_t> rho_inv(k), out(k);
  for (std::size_t i = 0; i < k; ++i) rho_inv[rho[i]] = i;
  for (std::size_t i = 0; i < k; ++i) out[i] = raw[rho_inv[i]];
  return out;
}

std::vector<Vertex> prufer_rank(const RootedTree& tree) {
  std::size_t n = tree.n;
  if (n < 2) throw Error(ErrorKind::MalformedTree, "need at least two nodes");
  if (tree.edges.size() != n - 1) throw Error(ErrorKind::MalformedTree, "a tree on n nodes has n-1 edges");
  if (tree.root < 1 || tree.root > n) throw Error(ErrorKind::MalformedTree, "root label out of range");
  std::vector<std::vector<Vertex>> adj(n + 1);
  for (auto e : tree.edges) {
    if (e.lo < 1 || e.hi > n || e.lo >= e.hi) throw Error(ErrorKind::MalformedTree, "bad edge");
    adj[e.lo].push_back(e.hi);
    adj[e.hi].push_back(e.lo);
  }
  // Connectivity check: n-1 edges plus connected means tree.
  std::vector<char> seen(n + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  if (reached != n) throw Error(ErrorKind::MalformedTree, "edges do not form a tree");

  std::vector<std::size_t> degree(n + 1);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<char> removed(n + 1, 0);
  std::vector<Vertex> seq;
  for (std::size_t step = 0; step + 2 < n; ++step) {
    Vertex leaf = leaves.top();
    leaves.pop();
    Vertex p = 0;
    for (Vertex w : adj[leaf])
      if (!removed[w]) p = w;
    seq.push_back(p);
    removed[leaf] = 1;
    if (--degree[p] == 1) leaves.push(p);
  }
  seq.push_back(tree.root);
  return seq;
}

RootedTree prufer_unrank(std::span<const Vertex> sequence) {
  if (sequence.empty()) throw Error(ErrorKind::MalformedTree, "empty sequence");
  std::size_t n = sequence.size() + 1;
  for (Vertex x : sequence)
    if (x < 1 || x > n) throw Error(ErrorKind::MalformedTree, "label " + std::to_string(x) + " out of range");
  std::vector<std::size_t> degree(n + 1, 1);
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) ++degree[sequence[i]];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.push(v);
  RootedTree t;
  t.n = n;
  t.root = sequence.back();
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    Vertex leaf = leaves.top();
    leaves.pop();
    Vertex p = sequence[i];
    t.edges.push_back(make_edge(leaf, p));
    degree[leaf] = 0;
    if (--degree[p] == 1) leaves.push(p);
  }
  Vertex a = leaves.top();
  leaves.pop();
  Vertex b = leaves.top();
  t.edges.push_back(make_edge(a, b));
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

NestingPreprocess nesting_tuple_preprocess(std::span<const std::size_t> tau, const FaceIntervals& intervals) {
  NestingPreprocess out;
  std::size_t c = intervals.components();
  out.parents.reserve(tau.size());
  out.degrees.assign(c + 1, 1);
  out.degrees[0] = 2;
  for (std::size_t label : tau) {
    std::size_t h = intervals.owner(label);
    out.parents.push_back(h);
    ++out.degrees[h];
  }
  return out;
}

}  // namespace embrank
