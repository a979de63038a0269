#include "combdyn/bijections.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace combdyn {

namespace {

// Unique path through a valley list: between consecutive valleys (and the
// sentinels (0,0), (2n,0)) the word rises, then falls.
DyckWord word_with_valleys(const std::vector<std::pair<int, int>>& valleys, int n) {
  std::string w;
  w.reserve(2 * n);
  int px = 0, ph = 0;
  auto segment = [&](int x, int h) {
    const int ups = ((x - px) + (h - ph)) / 2;
    const int downs = (x - px) - ups;
    if (ups < 0 || downs < 0 || ((x - px) + (h - ph)) % 2 != 0)
      throw std::logic_error("word_with_valleys: inconsistent valley list");
    w.append(ups, 'U');
    w.append(downs, 'D');
    px = x;
    ph = h;
  };
  for (auto [x, h] : valleys) segment(x, h);
  segment(2 * n, 0);
  return DyckWord(std::move(w));
}

}  // namespace

DyckWord e_p(const Permutation& p) {
  require_321_avoiding(p);
  const int n = p.size();
  const auto we = weak_excedances(p);
  std::string w;
  w.reserve(2 * n);
  w.append(we.front().second, 'U');
  for (std::size_t t = 1; t < we.size(); ++t) {
    w.append(we[t].first - we[t - 1].first, 'D');
    w.append(we[t].second - we[t - 1].second, 'U');
  }
  w.append(n - we.back().first + 1, 'D');
  return DyckWord(std::move(w));
}

Permutation e_p_inv(const DyckWord& d) {
  const int n = d.semilength();
  std::vector<int> img(n, 0);
  std::vector<bool> used(n + 1, false);
  for (auto [x, h] : d.peaks()) {
    // Peak (x,h) marks the weak excedance ((x-h+2)/2, (x+h)/2); height-1
    // peaks collapse to fixed points.
    const int i = (x - h + 2) / 2;
    const int j = (x + h) / 2;
    img[i - 1] = j;
    used[j] = true;
  }
  int next = 1;
  for (int i = 0; i < n; ++i) {
    if (img[i] != 0) continue;
    while (used[next]) ++next;
    img[i] = next;
    used[next] = true;
  }
  return Permutation(std::move(img));
}

DyckWord e_v(const Permutation& p) {
  require_321_avoiding(p);
  std::vector<std::pair<int, int>> vs;
  for (auto [i, j] : excedances(p)) vs.emplace_back(i + j - 1, j - i - 1);
  return word_with_valleys(vs, p.size());
}

Permutation e_v_inv(const DyckWord& d) {
  const int n = d.semilength();
  std::vector<int> img(n, 0);
  std::vector<bool> used(n + 1, false);
  for (auto [x, h] : d.valleys()) {
    const int i = (x - h) / 2;
    const int j = (x + h + 2) / 2;
    img[i - 1] = j;
    used[j] = true;
  }
  int next = 1;
  for (int i = 0; i < n; ++i) {
    if (img[i] != 0) continue;
    while (used[next]) ++next;
    img[i] = next;
    used[next] = true;
  }
  return Permutation(std::move(img));
}

DyckWord d_v(const Permutation& p) {
  require_321_avoiding(p);
  // The excedance path of pi^-1, drawn below the diagonal and read with the
  // horizontal step first: same word as the valley path of pi^-1.
  return e_v(p.inverse());
}

DyckWord lk(const DyckWord& d) { return d_v(e_p_inv(d)); }

Permutation lks(const Permutation& p) { return e_p_inv(lk(e_p(p))); }

AntichainA exc_map(const Permutation& p) {
  require_321_avoiding(p);
  std::vector<Interval> elements;
  for (auto [i, j] : excedances(p)) elements.push_back({i, j - 1});
  return AntichainA(p.size(), std::move(elements));
}

Permutation exc_inv(const AntichainA& a) {
  const int n = a.n();
  std::vector<int> img(n, 0);
  std::vector<bool> used(n + 1, false);
  for (const Interval& e : a.elements()) {
    img[e.a - 1] = e.b + 1;
    used[e.b + 1] = true;
  }
  int next = 1;
  for (int i = 0; i < n; ++i) {
    if (img[i] != 0) continue;
    while (used[next]) ++next;
    img[i] = next;
    used[next] = true;
  }
  return Permutation(std::move(img));
}

AntichainA ant_map(const DyckWord& d) {
  std::vector<Interval> elements;
  for (auto [x, h] : d.valleys()) elements.push_back({(x - h) / 2, (x + h) / 2});
  return AntichainA(d.semilength(), std::move(elements));
}

DyckWord ant_inv(const AntichainA& a) {
  std::vector<std::pair<int, int>> vs;
  for (const Interval& e : a.elements()) vs.emplace_back(e.a + e.b, e.b - e.a);
  return word_with_valleys(vs, a.n());
}

DyckWord path_map(const AntichainA& a) {
  const int n = a.n();
  std::string w;
  w.reserve(2 * n);
  int cx = 0, ch = 0;
  for (const Interval& e : a.elements()) {
    const int px = e.a + e.b;
    const int ph = e.b - e.a + 2;
    // Direct valley between the previous peak and this one; when it would
    // drop below height 1 the path returns to 0 and pads with UD factors.
    const int hv = (ch + ph - (px - cx)) / 2;
    if (hv >= 1) {
      w.append(ch - hv, 'D');
      w.append(ph - hv, 'U');
    } else {
      w.append(ch, 'D');
      const int pads = ((px - ph) - (cx + ch)) / 2;
      for (int k = 0; k < pads; ++k) w.append("UD");
      w.append(ph, 'U');
    }
    cx = px;
    ch = ph;
  }
  w.append(ch, 'D');
  const int pads = (2 * n - (cx + ch)) / 2;
  for (int k = 0; k < pads; ++k) w.append("UD");
  return DyckWord(std::move(w));
}

AntichainA path_inv(const DyckWord& d) {
  std::vector<Interval> elements;
  for (auto [x, h] : d.peaks())
    if (h >= 2) elements.push_back({(x - h + 2) / 2, (x + h - 2) / 2});
  return AntichainA(d.semilength(), std::move(elements));
}

NoncrossingMatching match_map(const DyckWord& d) {
  std::vector<std::pair<int, int>> arcs;
  for (const Tunnel& t : d.tunnels()) arcs.emplace_back(t.open, t.close);
  return NoncrossingMatching(d.semilength(), std::move(arcs));
}

DyckWord match_inv(const NoncrossingMatching& m) {
  std::string w(2 * m.n(), 'D');
  for (auto [x, y] : m.arcs()) w[x - 1] = 'U';
  return DyckWord(std::move(w));
}

AntichainA lka(const AntichainA& a) {
  const int n = a.n();
  // Panyushev complement: the new left endpoints are the values of 1..n-1
  // unused as right endpoints and vice versa, zipped in increasing order.
  std::vector<bool> left_used(n, false), right_used(n, false);
  for (const Interval& e : a.elements()) {
    left_used[e.a] = true;
    right_used[e.b] = true;
  }
  std::vector<int> lefts, rights;
  for (int v = 1; v <= n - 1; ++v) {
    if (!right_used[v]) lefts.push_back(v);
    if (!left_used[v]) rights.push_back(v);
  }
  std::vector<Interval> elements;
  for (std::size_t k = 0; k < lefts.size(); ++k)
    elements.push_back({lefts[k], rights[k]});
  AntichainA result(n, std::move(elements));
  assert(result == ant_map(lk(ant_inv(a))));
  return result;
}

AntichainA hat(const AntichainB& a) {
  const int m = a.m();
  std::vector<Interval> elements;
  for (const Interval& e : a.elements()) {
    elements.push_back(e);
    const Interval mirror{2 * m - e.b, 2 * m - e.a};
    if (mirror != e) elements.push_back(mirror);
  }
  return AntichainA(2 * m, std::move(elements));
}

AntichainB unhat(const AntichainA& a) {
  if (a.n() % 2 != 0)
    throw std::domain_error("unhat: antichain must live in A^(2m-1)");
  const int m = a.n() / 2;
  std::vector<Interval> elements;
  for (const Interval& e : a.elements()) {
    if (!a.contains({2 * m - e.b, 2 * m - e.a}))
      throw std::domain_error("unhat: antichain is not symmetric");
    if (e.a + e.b <= 2 * m) elements.push_back(e);
  }
  return AntichainB(m, std::move(elements));
}

}  // namespace combdyn
