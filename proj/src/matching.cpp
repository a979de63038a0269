#include "combdyn/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace combdyn {

namespace {

// Arcs (a,b), (c,d) with a < c cross iff a < c < b < d.
void check_noncrossing(const std::vector<std::pair<int, int>>& arcs,
                       const char* what) {
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      auto [a, b] = arcs[i];
      auto [c, d] = arcs[j];
      if (a < c && c < b && b < d)
        throw std::invalid_argument(std::string(what) + ": arcs cross");
    }
}

}  // namespace

NoncrossingMatching::NoncrossingMatching(int n,
                                         std::vector<std::pair<int, int>> arcs)
    : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 1) throw std::invalid_argument("matching: n must be positive");
  if (static_cast<int>(arcs_.size()) != n_)
    throw std::invalid_argument("matching: expected exactly n arcs");
  std::vector<bool> seen(2 * n_ + 1, false);
  for (auto& [x, y] : arcs_) {
    if (x > y) std::swap(x, y);
    if (x < 1 || y > 2 * n_ || x == y)
      throw std::invalid_argument("matching: endpoint outside 1..2n");
    if (seen[x] || seen[y])
      throw std::invalid_argument("matching: repeated endpoint");
    seen[x] = seen[y] = true;
  }
  std::sort(arcs_.begin(), arcs_.end());
  check_noncrossing(arcs_, "matching");
}

int NoncrossingMatching::partner(int v) const {
  for (auto [x, y] : arcs_) {
    if (x == v) return y;
    if (y == v) return x;
  }
  throw std::invalid_argument("matching: vertex outside 1..2n");
}

PartialMatching::PartialMatching(int n_vertices,
                                 std::vector<std::pair<int, int>> arcs)
    : n_vertices_(n_vertices), arcs_(std::move(arcs)) {
  if (n_vertices_ < 1)
    throw std::invalid_argument("partial matching: need at least one vertex");
  std::vector<bool> seen(n_vertices_ + 1, false);
  for (auto& [x, y] : arcs_) {
    if (x > y) std::swap(x, y);
    if (x < 1 || y > n_vertices_ || x == y)
      throw std::invalid_argument("partial matching: endpoint out of range");
    if (seen[x] || seen[y])
      throw std::invalid_argument("partial matching: repeated endpoint");
    seen[x] = seen[y] = true;
  }
  std::sort(arcs_.begin(), arcs_.end());
  check_noncrossing(arcs_, "partial matching");
  for (int v = 1; v <= n_vertices_; ++v)
    if (!seen[v]) unmatched_.push_back(v);
}

}  // namespace combdyn
