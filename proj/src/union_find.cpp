#include "embrank/union_find.hpp"

#include <string>
#include <utility>

#include "embrank/error.hpp"

namespace embrank {

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
}

void UnionFind::check(std::size_t a) const {
  if (a >= parent_.size())
    throw Error(ErrorKind::IndexOutOfRange, "union-find index " + std::to_string(a) + " >= " + std::to_string(parent_.size()));
}

std::size_t UnionFind::find(std::size_t a) {
  check(a);
  std::size_t root = a;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[a] != root) {
    std::size_t next = parent_[a];
    parent_[a] = root;
    a = next;
  }
  return root;
}

std::size_t UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return a;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return a;
}

}  // namespace embrank
