#include "combdyn/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace combdyn {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n == 0) throw std::invalid_argument("permutation: empty image list");
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("permutation: images are not a bijection of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation: size must be positive");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 1; i <= size(); ++i) img[(*this)(i) - 1] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::reverse_complement() const {
  const int n = size();
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = n + 1 - (*this)(n + 1 - i);
  return Permutation(std::move(img));
}

Permutation Permutation::reversed() const {
  std::vector<int> img(images_.rbegin(), images_.rend());
  return Permutation(std::move(img));
}

bool Permutation::is_321_avoiding() const {
  // One pass: track the largest value seen and the largest value that
  // already has a bigger value in front of it.  A value below the latter
  // completes a 321 pattern.
  int max_seen = 0;
  int max_dominated = 0;
  for (int v : images_) {
    if (v < max_dominated) return false;
    if (v < max_seen) max_dominated = std::max(max_dominated, v);
    max_seen = std::max(max_seen, v);
  }
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)((*this)(i)) != i) return false;
  return true;
}

void require_321_avoiding(const Permutation& p) {
  if (!p.is_321_avoiding())
    throw std::domain_error("permutation is not 321-avoiding");
}

std::vector<std::pair<int, int>> excedances(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) > i) out.emplace_back(i, p(i));
  return out;
}

std::vector<std::pair<int, int>> weak_excedances(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) >= i) out.emplace_back(i, p(i));
  return out;
}

}  // namespace combdyn
