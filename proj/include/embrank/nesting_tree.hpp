#pragma once

#include <cstddef>
#include <vector>

namespace embrank {

// Global positions of the inner faces of all components: component h owns the
// consecutive block I_h = [lo(h) .. hi(h)] of 1-based positions; 0 stands for
// the dummy root. Components are 1-based.
class FaceIntervals {
 public:
  FaceIntervals() = default;
  explicit FaceIntervals(std::vector<std::size_t> face_counts);

  std::size_t components() const { return counts_.size(); }
  std::size_t face_count(std::size_t h) const { return counts_[h - 1]; }
  std::size_t total_inner() const { return start_.empty() ? 0 : start_.back() - 1; }
  std::size_t lo(std::size_t h) const { return start_[h - 1]; }
  // hi(h) < lo(h) when component h has no inner face.
  std::size_t hi(std::size_t h) const { return start_[h] - 1; }
  // Component owning a label (0 for label 0). Throws LabelOutOfRange.
  std::size_t owner(std::size_t label) const;

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> start_;  // start_[h-1] = lo(h); start_[c] = total+1
};

struct NestingLink {
  std::size_t parent = 0;  // 0 is the dummy root
  std::size_t label = 0;

  friend auto operator<=>(const NestingLink&, const NestingLink&) = default;
};

// Rooted labeled tree on the dummy root and components 1..c; links[i-1] is the
// edge from component i to its parent.
struct NestingTree {
  std::vector<NestingLink> links;

  std::size_t size() const { return links.size(); }
  const NestingLink& of(std::size_t component) const { return links[component - 1]; }
  friend bool operator==(const NestingTree&, const NestingTree&) = default;
};

}  // namespace embrank
