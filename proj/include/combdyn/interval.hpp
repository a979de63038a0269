#pragma once

#include <compare>

namespace combdyn {

// Element [a,b] of a root poset of type A or B, ordered by interval inclusion.
// rank equals the height of the element above the minimal row.
struct Interval {
  int a = 0;
  int b = 0;

  int rank() const { return b - a; }
  bool contains(const Interval& o) const { return a <= o.a && o.b <= b; }
  bool comparable_with(const Interval& o) const {
    return contains(o) || o.contains(*this);
  }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

}  // namespace combdyn
