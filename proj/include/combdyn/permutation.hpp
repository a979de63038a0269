#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace combdyn {

// Permutation of {1..n} in one-line notation.  Values and positions are
// 1-based throughout.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // pi^rc(i) = n+1-pi(n+1-i); a 180 degree rotation of the permutation array.
  Permutation reverse_complement() const;
  Permutation reversed() const;

  bool is_321_avoiding() const;
  bool is_involution() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& x,
                                          const Permutation& y) {
    return x.images_ <=> y.images_;
  }

 private:
  std::vector<int> images_;
};

// Throws std::domain_error when p contains a 321 pattern.
void require_321_avoiding(const Permutation& p);

// Positions i with pi(i) > i, paired with their values, in position order.
std::vector<std::pair<int, int>> excedances(const Permutation& p);
// Positions with pi(i) >= i.
std::vector<std::pair<int, int>> weak_excedances(const Permutation& p);

}  // namespace combdyn
