#include "combdyn/tableau.hpp"

#include <stdexcept>

namespace combdyn {

namespace {

void validate(const std::vector<int>& inner,
              const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw std::invalid_argument("tableau: no rows");
  if (inner.size() != rows.size())
    throw std::invalid_argument("tableau: inner/rows size mismatch");
  int boxes = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (inner[r] < 0) throw std::invalid_argument("tableau: negative inner row");
    if (rows[r].empty()) throw std::invalid_argument("tableau: empty row");
    boxes += static_cast<int>(rows[r].size());
  }
  std::vector<bool> seen(boxes + 1, false);
  for (const auto& row : rows)
    for (int v : row) {
      if (v < 1 || v > boxes || seen[v])
        throw std::invalid_argument("tableau: entries are not exactly 1..N");
      seen[v] = true;
    }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int outer_r = inner[r] + static_cast<int>(rows[r].size());
    if (r + 1 < rows.size()) {
      const int outer_next = inner[r + 1] + static_cast<int>(rows[r + 1].size());
      if (outer_next > outer_r || inner[r + 1] > inner[r])
        throw std::invalid_argument("tableau: shape is not a skew diagram");
    }
    for (std::size_t c = 1; c < rows[r].size(); ++c)
      if (rows[r][c - 1] >= rows[r][c])
        throw std::invalid_argument("tableau: row not increasing");
  }
  for (std::size_t r = 0; r + 1 < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r + 1].size(); ++c) {
      // Absolute column of the lower cell; compare when the cell above exists.
      const int col = inner[r + 1] + static_cast<int>(c);
      if (col >= inner[r] &&
          col < inner[r] + static_cast<int>(rows[r].size())) {
        if (rows[r][col - inner[r]] >= rows[r + 1][c])
          throw std::invalid_argument("tableau: column not increasing");
      }
    }
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows)
    : inner_(rows.size(), 0), rows_(std::move(rows)) {
  validate(inner_, rows_);
}

Tableau::Tableau(std::vector<int> inner, std::vector<std::vector<int>> rows)
    : inner_(std::move(inner)), rows_(std::move(rows)) {
  validate(inner_, rows_);
}

int Tableau::box_count() const {
  int boxes = 0;
  for (const auto& row : rows_) boxes += static_cast<int>(row.size());
  return boxes;
}

std::vector<int> Tableau::outer() const {
  std::vector<int> out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    out[r] = inner_[r] + static_cast<int>(rows_[r].size());
  return out;
}

bool Tableau::is_straight() const {
  for (int z : inner_)
    if (z != 0) return false;
  return true;
}

std::pair<int, int> Tableau::find(int entry) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] == entry)
        return {static_cast<int>(r), inner_[r] + static_cast<int>(c)};
  throw std::invalid_argument("tableau: entry not present");
}

}  // namespace combdyn
