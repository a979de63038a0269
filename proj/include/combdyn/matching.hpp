#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace combdyn {

// Perfect noncrossing matching of 2n points on a circle, labeled 1..2n.
// Arcs are stored as (x, y) with x < y, sorted by x.
class NoncrossingMatching {
 public:
  NoncrossingMatching(int n, std::vector<std::pair<int, int>> arcs);

  int n() const { return n_; }
  int vertex_count() const { return 2 * n_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  int partner(int v) const;

  friend bool operator==(const NoncrossingMatching&,
                         const NoncrossingMatching&) = default;
  friend auto operator<=>(const NoncrossingMatching&,
                          const NoncrossingMatching&) = default;

 private:
  int n_;
  std::vector<std::pair<int, int>> arcs_;
};

// Noncrossing partial matching on vertices 1..n_vertices; vertices not on
// any arc are recorded as unmatched.
class PartialMatching {
 public:
  PartialMatching(int n_vertices, std::vector<std::pair<int, int>> arcs);

  int vertex_count() const { return n_vertices_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  const std::vector<int>& unmatched() const { return unmatched_; }

  friend bool operator==(const PartialMatching&, const PartialMatching&) =
      default;
  friend auto operator<=>(const PartialMatching&, const PartialMatching&) =
      default;

 private:
  int n_vertices_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<int> unmatched_;
};

}  // namespace combdyn
