#pragma once

#include <compare>
#include <vector>

#include "combdyn/interval.hpp"

namespace combdyn {

// Antichain in the type A root poset A^(n-1) = {[i,j] : 1 <= i <= j <= n-1}.
// Elements are kept sorted; pairwise incomparability is enforced.
class AntichainA {
 public:
  AntichainA(int n, std::vector<Interval> elements);

  int n() const { return n_; }
  const std::vector<Interval>& elements() const { return elements_; }
  bool contains(const Interval& e) const;
  bool empty() const { return elements_.empty(); }
  int size() const { return static_cast<int>(elements_.size()); }

  friend bool operator==(const AntichainA&, const AntichainA&) = default;
  friend auto operator<=>(const AntichainA&, const AntichainA&) = default;

 private:
  int n_;
  std::vector<Interval> elements_;
};

// Antichain in the type B root poset B^m, realized as the intervals
// {[i,j] : 1 <= i <= j <= 2m-1, i+j <= 2m} ordered by inclusion.
class AntichainB {
 public:
  AntichainB(int m, std::vector<Interval> elements);

  int m() const { return m_; }
  const std::vector<Interval>& elements() const { return elements_; }
  bool contains(const Interval& e) const;
  int size() const { return static_cast<int>(elements_.size()); }

  friend bool operator==(const AntichainB&, const AntichainB&) = default;
  friend auto operator<=>(const AntichainB&, const AntichainB&) = default;

 private:
  int m_;
  std::vector<Interval> elements_;
};

enum class SubsetKind { ideal, filter };

// Order ideal or order filter of A^(n-1); closure under the order is
// validated on construction.
class OrderSubset {
 public:
  OrderSubset(int n, SubsetKind kind, std::vector<Interval> members);

  int n() const { return n_; }
  SubsetKind kind() const { return kind_; }
  const std::vector<Interval>& members() const { return members_; }
  bool contains(const Interval& e) const;
  int size() const { return static_cast<int>(members_.size()); }

  friend bool operator==(const OrderSubset&, const OrderSubset&) = default;
  friend auto operator<=>(const OrderSubset&, const OrderSubset&) = default;

 private:
  int n_;
  SubsetKind kind_;
  std::vector<Interval> members_;
};

// All elements of A^(n-1) in lexicographic order.
std::vector<Interval> poset_elements_a(int n);
// Canonical representatives of B^m in lexicographic order.
std::vector<Interval> poset_elements_b(int m);

}  // namespace combdyn
