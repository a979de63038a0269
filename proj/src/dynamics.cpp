#include "combdyn/dynamics.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "combdyn/bijections.hpp"

namespace combdyn {

namespace {

// x <= y in the interval order (containment).
bool below(const Interval& x, const Interval& y) {
  return y.a <= x.a && x.b <= y.b;
}

void require_kind(const OrderSubset& s, SubsetKind kind, const char* what) {
  if (s.kind() != kind)
    throw std::domain_error(std::string(what) + ": wrong subset kind");
}

}  // namespace

OrderSubset ideal_generated(const AntichainA& a) {
  std::vector<Interval> members;
  for (const Interval& e : poset_elements_a(a.n()))
    for (const Interval& g : a.elements())
      if (below(e, g)) {
        members.push_back(e);
        break;
      }
  return OrderSubset(a.n(), SubsetKind::ideal, std::move(members));
}

OrderSubset filter_generated(const AntichainA& a) {
  std::vector<Interval> members;
  for (const Interval& e : poset_elements_a(a.n()))
    for (const Interval& g : a.elements())
      if (below(g, e)) {
        members.push_back(e);
        break;
      }
  return OrderSubset(a.n(), SubsetKind::filter, std::move(members));
}

AntichainA maximal_elements(const OrderSubset& s) {
  std::vector<Interval> elements;
  for (const Interval& e : s.members()) {
    bool top = true;
    for (const Interval& g : s.members())
      if (g != e && below(e, g)) {
        top = false;
        break;
      }
    if (top) elements.push_back(e);
  }
  return AntichainA(s.n(), std::move(elements));
}

AntichainA minimal_elements(const OrderSubset& s) {
  std::vector<Interval> elements;
  for (const Interval& e : s.members()) {
    bool bottom = true;
    for (const Interval& g : s.members())
      if (g != e && below(g, e)) {
        bottom = false;
        break;
      }
    if (bottom) elements.push_back(e);
  }
  return AntichainA(s.n(), std::move(elements));
}

OrderSubset complement(const OrderSubset& s) {
  std::vector<Interval> members;
  for (const Interval& e : poset_elements_a(s.n()))
    if (!s.contains(e)) members.push_back(e);
  const SubsetKind kind = s.kind() == SubsetKind::ideal ? SubsetKind::filter
                                                        : SubsetKind::ideal;
  return OrderSubset(s.n(), kind, std::move(members));
}

AntichainA rowmotion_a_via_transfer(const AntichainA& a) {
  return minimal_elements(complement(ideal_generated(a)));
}

AntichainA rowmotion_a_inv_via_transfer(const AntichainA& a) {
  return maximal_elements(complement(filter_generated(a)));
}

AntichainA rowmotion_a(const AntichainA& a) {
  AntichainA result = ant_map(path_map(a));
  assert(result == rowmotion_a_via_transfer(a));
  return result;
}

AntichainA rowmotion_a_inv(const AntichainA& a) {
  AntichainA result = path_inv(ant_inv(a));
  assert(result == rowmotion_a_inv_via_transfer(a));
  return result;
}

OrderSubset rowmotion_i(const OrderSubset& ideal) {
  require_kind(ideal, SubsetKind::ideal, "rowmotion_i");
  return ideal_generated(minimal_elements(complement(ideal)));
}

OrderSubset rowmotion_f(const OrderSubset& filter) {
  require_kind(filter, SubsetKind::filter, "rowmotion_f");
  return complement(ideal_generated(minimal_elements(filter)));
}

DyckWord rowmotion_d(const DyckWord& d) { return path_map(ant_map(d)); }

DyckWord rowmotion_d_inv(const DyckWord& d) { return ant_inv(path_inv(d)); }

Permutation rowmotion_s_via_antichains(const Permutation& p) {
  return exc_inv(rowmotion_a(exc_map(p)));
}

Permutation rowmotion_s(const Permutation& p) {
  Permutation result = e_v_inv(e_p(p));
  assert(result == rowmotion_s_via_antichains(p));
  return result;
}

Permutation rowmotion_s_inv(const Permutation& p) {
  Permutation result = e_p_inv(e_v(p));
  assert(result == exc_inv(rowmotion_a_inv(exc_map(p))));
  return result;
}

DyckWord promotion_dyck(const DyckWord& d) {
  const std::string& w = d.word();
  int r = 0, h = 0;
  for (int i = 0; i < d.length(); ++i) {
    h += w[i] == 'U' ? 1 : -1;
    if (h == 0) {
      r = i;
      break;
    }
  }
  // w = U A D B with the D at index r; result is A U B D.
  std::string out = w.substr(1, r - 1);
  out += 'U';
  out += w.substr(r + 1);
  out += 'D';
  return DyckWord(std::move(out));
}

DyckWord promotion_dyck_inv(const DyckWord& d) {
  const std::string& w = d.word();
  const int len = d.length();
  int u = 0, depth = 0;
  for (int i = len - 1; i >= 0; --i) {
    if (w[i] == 'D') {
      ++depth;
    } else if (--depth == 0) {
      u = i;
      break;
    }
  }
  // w = A U B D with the U at index u; result is U A D B.
  std::string out = "U";
  out += w.substr(0, u);
  out += 'D';
  out += w.substr(u + 1, len - u - 2);
  return DyckWord(std::move(out));
}

NoncrossingMatching rotate(const NoncrossingMatching& m) {
  const int verts = m.vertex_count();
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(m.arcs().size());
  for (auto [x, y] : m.arcs())
    arcs.emplace_back(x % verts + 1, y % verts + 1);
  return NoncrossingMatching(m.n(), std::move(arcs));
}

bool is_centrally_symmetric(const NoncrossingMatching& m) {
  const int verts = m.vertex_count();
  for (auto [x, y] : m.arcs()) {
    const int xr = (x + m.n() - 1) % verts + 1;
    const int yr = (y + m.n() - 1) % verts + 1;
    if (m.partner(xr) != yr) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> ast_steps(const AntichainA& a) {
  const int n = a.n();
  const int verts = 2 * n;
  std::vector<bool> used(verts + 1, false);
  auto scan = [&](int from, int dir) {
    int v = from;
    for (int k = 1; k < verts; ++k) {
      v += dir;
      if (v == 0) v = verts;
      if (v == verts + 1) v = 1;
      if (!used[v]) return v;
    }
    throw std::logic_error("ast: no unmatched vertex in range");
  };
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(n);
  for (int i = 1; i <= n; ++i) {
    int start = 0;
    for (const Interval& e : a.elements())
      if (e.a == i) {
        start = e.b + 1;  // [i, j-1] in a: vertex j scans counterclockwise
        break;
      }
    int dir = -1;
    if (start == 0) {
      start = 2 * n + 1 - i;  // i-bar scans clockwise
      dir = 1;
    }
    if (used[start]) throw std::logic_error("ast: start vertex already matched");
    used[start] = true;
    const int other = scan(start, dir);
    used[other] = true;
    arcs.emplace_back(std::min(start, other), std::max(start, other));
  }
  return arcs;
}

NoncrossingMatching ast(const AntichainA& a) {
  return NoncrossingMatching(a.n(), ast_steps(a));
}

NoncrossingMatching ast_b(const AntichainB& a) {
  return ast(hat(a));
}

std::vector<int> bottoms(const NoncrossingMatching& m) {
  const int edge = 2 * m.n() + 1;
  std::vector<int> out;
  out.reserve(m.arcs().size());
  for (auto [x, y] : m.arcs()) out.push_back(x + y <= edge ? y : x);
  std::sort(out.begin(), out.end());
  return out;
}

NoncrossingMatching matching_from_bottoms(const std::vector<int>& bottom_set,
                                          int n) {
  const int verts = 2 * n;
  if (static_cast<int>(bottom_set.size()) != n)
    throw std::domain_error("matching_from_bottoms: need exactly n bottoms");
  std::vector<bool> is_bottom(verts + 1, false);
  for (int v : bottom_set) {
    if (v < 1 || v > verts || is_bottom[v])
      throw std::domain_error("matching_from_bottoms: bad bottom set");
    is_bottom[v] = true;
  }
  // Label left-half bottoms 2n+1-i with index i, then hand the unused
  // indices to the right-half bottoms in increasing order.
  std::vector<int> order(n + 1, 0);
  std::vector<bool> index_used(n + 1, false);
  for (int v = n + 1; v <= verts; ++v)
    if (is_bottom[v]) {
      order[verts + 1 - v] = v;
      index_used[verts + 1 - v] = true;
    }
  int next = 1;
  for (int v = 1; v <= n; ++v)
    if (is_bottom[v]) {
      while (index_used[next]) ++next;
      order[next] = v;
      index_used[next] = true;
    }

  std::vector<bool> used(verts + 1, false);
  std::vector<std::pair<int, int>> arcs;
  for (int i = 1; i <= n; ++i) {
    const int b = order[i];
    // Walk upward along b's own side of the circle, wrapping over the top
    // down the other side, and take the first unmatched vertex u for which
    // the arc {u,b} would have bottom b. That predicate carves out exactly
    // the weakly-above region, with the same-height tie broken so that a
    // right-half bottom skips its mirror while a left-half bottom may use it.
    auto top_ok = [&](int u) {
      if (used[u]) return false;
      return u < b ? u + b <= verts + 1 : u + b >= verts + 2;
    };
    used[b] = true;
    const int dir = b <= n ? -1 : 1;
    int match = 0;
    for (int d = 1; d < verts && match == 0; ++d) {
      int u = b + dir * d;
      if (u < 1) u += verts;
      if (u > verts) u -= verts;
      if (top_ok(u)) match = u;
    }
    if (match == 0)
      throw std::domain_error("matching_from_bottoms: inconsistent bottoms");
    used[match] = true;
    arcs.emplace_back(std::min(b, match), std::max(b, match));
  }
  std::vector<int> want = bottom_set;
  std::sort(want.begin(), want.end());
  try {
    NoncrossingMatching m(n, std::move(arcs));
    if (bottoms(m) != want)
      throw std::domain_error("matching_from_bottoms: set is not a bottom set");
    return m;
  } catch (const std::invalid_argument&) {
    throw std::domain_error("matching_from_bottoms: set is not a bottom set");
  }
}

}  // namespace combdyn
