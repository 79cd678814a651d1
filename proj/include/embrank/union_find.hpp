#pragma once

#include <cstddef>
#include <vector>

namespace embrank {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t a);
  // Returns the representative of the merged class.
  std::size_t unite(std::size_t a, std::size_t b);
  std::size_t size() const { return parent_.size(); }

 private:
  void check(std::size_t a) const;

  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

}  // namespace embrank
