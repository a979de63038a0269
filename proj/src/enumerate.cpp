#include "combdyn/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "combdyn/bijections.hpp"

namespace combdyn {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": size must be positive");
}

}  // namespace

void for_each_avoider(int n, const std::function<void(const Permutation&)>& visit) {
  require_positive(n, "for_each_avoider");
  std::vector<int> img;
  img.reserve(n);
  std::vector<bool> used(n + 1, false);
  // max_seen: largest placed value; max_dominated: largest placed value with
  // a bigger value in front of it.  A prefix extends to an avoider iff every
  // unused value is at least max_dominated.
  auto rec = [&](auto&& self, int max_seen, int max_dominated) -> void {
    if (static_cast<int>(img.size()) == n) {
      visit(Permutation(img));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v] || v < max_dominated) continue;
      const int new_dominated =
          v < max_seen ? std::max(max_dominated, v) : max_dominated;
      used[v] = true;
      int min_unused = 1;
      while (min_unused <= n && used[min_unused]) ++min_unused;
      if (min_unused > n || min_unused >= new_dominated) {
        img.push_back(v);
        self(self, std::max(max_seen, v), new_dominated);
        img.pop_back();
      }
      used[v] = false;
    }
  };
  rec(rec, 0, 0);
}

void for_each_dyck(int n, const std::function<void(const DyckWord&)>& visit) {
  require_positive(n, "for_each_dyck");
  std::string w;
  w.reserve(2 * n);
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (static_cast<int>(w.size()) == 2 * n) {
      visit(DyckWord(w));
      return;
    }
    if (ups < n) {
      w.push_back('U');
      self(self, ups + 1, downs);
      w.pop_back();
    }
    if (downs < ups) {
      w.push_back('D');
      self(self, ups, downs + 1);
      w.pop_back();
    }
  };
  rec(rec, 0, 0);
}

namespace {

template <class Antichain>
void enumerate_antichains(const std::vector<Interval>& elements, int size,
                          const std::function<void(const Antichain&)>& visit) {
  std::vector<Interval> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    visit(Antichain(size, chosen));
    for (std::size_t k = start; k < elements.size(); ++k) {
      bool ok = true;
      for (const Interval& e : chosen)
        if (e.comparable_with(elements[k])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(elements[k]);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

void for_each_antichain(int n, const std::function<void(const AntichainA&)>& visit) {
  require_positive(n, "for_each_antichain");
  enumerate_antichains<AntichainA>(poset_elements_a(n), n, visit);
}

void for_each_antichain_b(int m, const std::function<void(const AntichainB&)>& visit) {
  require_positive(m, "for_each_antichain_b");
  enumerate_antichains<AntichainB>(poset_elements_b(m), m, visit);
}

void for_each_matching(int n, const std::function<void(const NoncrossingMatching&)>& visit) {
  for_each_dyck(n, [&](const DyckWord& d) { visit(match_map(d)); });
}

void for_each_two_row_tableau(int boxes, const std::function<void(const Tableau&)>& visit) {
  require_positive(boxes, "for_each_two_row_tableau");
  for (int second = 0; second * 2 <= boxes; ++second) {
    std::vector<int> top, bottom;
    auto rec = [&](auto&& self, int entry) -> void {
      if (entry > boxes) {
        if (bottom.empty()) visit(Tableau({top}));
        else visit(Tableau({top, bottom}));
        return;
      }
      if (static_cast<int>(top.size()) < boxes - second) {
        top.push_back(entry);
        self(self, entry + 1);
        top.pop_back();
      }
      if (static_cast<int>(bottom.size()) < second && bottom.size() < top.size()) {
        bottom.push_back(entry);
        self(self, entry + 1);
        bottom.pop_back();
      }
    };
    rec(rec, 1);
  }
}

std::vector<Permutation> all_avoiders(int n) {
  std::vector<Permutation> out;
  for_each_avoider(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<DyckWord> all_dyck(int n) {
  std::vector<DyckWord> out;
  for_each_dyck(n, [&](const DyckWord& d) { out.push_back(d); });
  return out;
}

std::vector<AntichainA> all_antichains(int n) {
  std::vector<AntichainA> out;
  for_each_antichain(n, [&](const AntichainA& a) { out.push_back(a); });
  return out;
}

std::vector<AntichainB> all_antichains_b(int m) {
  std::vector<AntichainB> out;
  for_each_antichain_b(m, [&](const AntichainB& a) { out.push_back(a); });
  return out;
}

std::vector<NoncrossingMatching> all_matchings(int n) {
  std::vector<NoncrossingMatching> out;
  for_each_matching(n, [&](const NoncrossingMatching& m) { out.push_back(m); });
  return out;
}

std::vector<Tableau> all_two_row_tableaux(int boxes) {
  std::vector<Tableau> out;
  for_each_two_row_tableau(boxes, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

long long catalan(int n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

}  // namespace combdyn
