#include "combdyn/tableaux.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace combdyn {

std::pair<Tableau, Tableau> rsk(const Permutation& p) {
  std::vector<std::vector<int>> P, Q;
  for (int i = 1; i <= p.size(); ++i) {
    int v = p(i);
    std::size_t r = 0;
    while (true) {
      if (r == P.size()) {
        P.push_back({v});
        Q.push_back({i});
        break;
      }
      auto it = std::upper_bound(P[r].begin(), P[r].end(), v);
      if (it == P[r].end()) {
        P[r].push_back(v);
        Q[r].push_back(i);
        break;
      }
      std::swap(*it, v);
      ++r;
    }
  }
  return {Tableau(std::move(P)), Tableau(std::move(Q))};
}

Permutation rsk_inv(const Tableau& p, const Tableau& q) {
  if (!p.is_straight() || !q.is_straight())
    throw std::domain_error("rsk_inv: tableaux must have straight shape");
  if (p.outer() != q.outer())
    throw std::domain_error("rsk_inv: shapes differ");
  std::vector<std::vector<int>> P = p.rows();
  const int n = p.box_count();
  std::vector<int> img(n, 0);
  for (int k = n; k >= 1; --k) {
    auto [r, c] = q.find(k);
    if (c != static_cast<int>(P[r].size()) - 1)
      throw std::domain_error("rsk_inv: recording tableau is not standard");
    int v = P[r].back();
    P[r].pop_back();
    for (int row = r - 1; row >= 0; --row) {
      auto it = std::lower_bound(P[row].begin(), P[row].end(), v);
      --it;  // rightmost entry smaller than v; exists since v was bumped
      std::swap(*it, v);
    }
    img[k - 1] = v;
    if (P[r].empty()) P.erase(P.begin() + r);
  }
  return Permutation(std::move(img));
}

DyckWord rskd(const Permutation& p) {
  require_321_avoiding(p);
  const int n = p.size();
  auto [P, Q] = rsk(p);
  std::string w(2 * n, 'U');
  auto in_top = [](const Tableau& t, int entry) {
    const auto& top = t.rows().front();
    return std::binary_search(top.begin(), top.end(), entry);
  };
  for (int i = 1; i <= n; ++i) {
    w[i - 1] = in_top(P, i) ? 'U' : 'D';
    w[2 * n - i] = in_top(Q, i) ? 'D' : 'U';
  }
  return DyckWord(std::move(w));
}

Tableau tab(const DyckWord& d) {
  std::vector<int> top, bottom;
  for (int x = 1; x <= d.length(); ++x)
    (d.step(x) == 'U' ? top : bottom).push_back(x);
  return Tableau({std::move(top), std::move(bottom)});
}

DyckWord tab_inv(const Tableau& t) {
  if (!t.is_straight() || t.row_count() != 2 ||
      t.rows()[0].size() != t.rows()[1].size())
    throw std::domain_error("tab_inv: expected a two-row rectangle");
  const int len = t.box_count();
  std::string w(len, 'D');
  for (int v : t.rows()[0]) w[v - 1] = 'U';
  return DyckWord(std::move(w));
}

Tableau toggle(const Tableau& t, int i) {
  if (!t.is_straight())
    throw std::domain_error("toggle: tableau must have straight shape");
  if (i < 1 || i >= t.box_count())
    throw std::domain_error("toggle: index out of range");
  auto [r1, c1] = t.find(i);
  auto [r2, c2] = t.find(i + 1);
  if (r1 == r2 || c1 == c2) return t;
  std::vector<std::vector<int>> rows = t.rows();
  rows[r1][c1] = i + 1;
  rows[r2][c2] = i;
  return Tableau(std::move(rows));
}

Tableau promotion_syt(const Tableau& t) {
  Tableau out = t;
  for (int i = 1; i < t.box_count(); ++i) out = toggle(out, i);
  return out;
}

Tableau evacuation(const Tableau& t) {
  Tableau out = t;
  for (int k = t.box_count() - 1; k >= 1; --k)
    for (int i = 1; i <= k; ++i) out = toggle(out, i);
  return out;
}

namespace {

// Grid with 0 marking the holes of the inner shape.
std::vector<std::vector<int>> to_grid(const Tableau& t) {
  std::vector<std::vector<int>> grid(t.row_count());
  for (int r = 0; r < t.row_count(); ++r) {
    grid[r].assign(t.inner()[r], 0);
    grid[r].insert(grid[r].end(), t.rows()[r].begin(), t.rows()[r].end());
  }
  return grid;
}

Tableau from_grid(std::vector<std::vector<int>> grid) {
  std::vector<int> inner;
  std::vector<std::vector<int>> rows;
  for (auto& row : grid) {
    if (row.empty()) continue;
    int z = 0;
    while (z < static_cast<int>(row.size()) && row[z] == 0) ++z;
    inner.push_back(z);
    rows.emplace_back(row.begin() + z, row.end());
  }
  return Tableau(std::move(inner), std::move(rows));
}

}  // namespace

Tableau jdt_rectify(const Tableau& t) {
  auto grid = to_grid(t);
  while (true) {
    // Slide from the rightmost inner corner of the topmost row that has one:
    // the first row whose run of holes is longer than the next row's run.
    auto holes = [&](int row) {
      if (row >= static_cast<int>(grid.size())) return 0;
      int z = 0;
      while (z < static_cast<int>(grid[row].size()) && grid[row][z] == 0) ++z;
      return z;
    };
    int r = -1;
    for (int row = 0; row < static_cast<int>(grid.size()); ++row)
      if (holes(row) > 0 && holes(row) > holes(row + 1)) {
        r = row;
        break;
      }
    if (r < 0) break;
    int c = holes(r) - 1;
    while (true) {
      const bool below = r + 1 < static_cast<int>(grid.size()) &&
                         c < static_cast<int>(grid[r + 1].size());
      const bool right = c + 1 < static_cast<int>(grid[r].size());
      if (!below && !right) break;
      if (!below || (right && grid[r][c + 1] < grid[r + 1][c])) {
        grid[r][c] = grid[r][c + 1];
        ++c;
      } else {
        grid[r][c] = grid[r + 1][c];
        ++r;
      }
    }
    grid[r].resize(c);
    while (!grid.empty() && grid.back().empty()) grid.pop_back();
  }
  return from_grid(std::move(grid));
}

Tableau evac_via_rotation(const Tableau& t) {
  if (!t.is_straight())
    throw std::domain_error("evacuation: tableau must have straight shape");
  const int boxes = t.box_count();
  const int height = t.row_count();
  const int width = static_cast<int>(t.rows()[0].size());
  std::vector<std::vector<int>> grid(height, std::vector<int>(width, 0));
  for (int r = 0; r < height; ++r)
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c)
      grid[height - 1 - r][width - 1 - c] = boxes + 1 - t.rows()[r][c];
  return jdt_rectify(from_grid(std::move(grid)));
}

PartialMatching partial_match(const Tableau& t) {
  if (!t.is_straight() || t.row_count() > 2)
    throw std::domain_error("partial_match: tableau must have at most two rows");
  const int boxes = t.box_count();
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> open;
  for (int k = 1; k <= boxes; ++k) {
    if (t.find(k).first == 0) {
      open.push_back(k);
    } else {
      arcs.emplace_back(open.back(), k);
      open.pop_back();
    }
  }
  return PartialMatching(boxes, std::move(arcs));
}

}  // namespace combdyn
