#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace combdyn {

// Standard tableau of straight or skew shape.  rows() holds the filled
// entries of each row; inner() gives the number of missing leading cells per
// row (all zero for a straight shape).  Entries are exactly 1..box_count(),
// strictly increasing along rows and down columns.
class Tableau {
 public:
  explicit Tableau(std::vector<std::vector<int>> rows);
  Tableau(std::vector<int> inner, std::vector<std::vector<int>> rows);

  int row_count() const { return static_cast<int>(rows_.size()); }
  int box_count() const;
  const std::vector<int>& inner() const { return inner_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> outer() const;
  bool is_straight() const;

  // (row, absolute column) of an entry, both 0-based.
  std::pair<int, int> find(int entry) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  std::vector<int> inner_;
  std::vector<std::vector<int>> rows_;
};

}  // namespace combdyn
