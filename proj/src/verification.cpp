#include "combdyn/verification.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "combdyn/bijections.hpp"
#include "combdyn/dynamics.hpp"
#include "combdyn/enumerate.hpp"
#include "combdyn/serialize.hpp"
#include "combdyn/statistics.hpp"
#include "combdyn/tableaux.hpp"

namespace combdyn {

namespace {

using Fail = std::optional<std::string>;

std::string at(int n, char param = 'n') {
  return std::string(1, param) + "=" + std::to_string(n) + " ";
}

void for_each_permutation(int n,
                          const std::function<void(const Permutation&)>& visit) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

// [i,j] -> [n-j, n-i], the left-right mirror of the type A root poset.
AntichainA vertical_reflection(const AntichainA& a) {
  std::vector<Interval> out;
  for (const auto& e : a.elements()) out.push_back({a.n() - e.b, a.n() - e.a});
  std::sort(out.begin(), out.end());
  return AntichainA(a.n(), out);
}

template <class T, class Step>
std::vector<T> orbit_elements(const T& start, Step step) {
  std::vector<T> orb{start};
  for (T v = step(start); !(v == start); v = step(v)) orb.push_back(v);
  return orb;
}

bool has_increasing_triple(const Permutation& p) {
  int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (p(i) < p(j) && p(j) < p(k)) return true;
  return false;
}

TunnelClass mirror_class(TunnelClass c) {
  switch (c) {
    case TunnelClass::left: return TunnelClass::right;
    case TunnelClass::right: return TunnelClass::left;
    case TunnelClass::left_across: return TunnelClass::right_across;
    case TunnelClass::right_across: return TunnelClass::left_across;
    case TunnelClass::centered: return TunnelClass::centered;
  }
  throw std::logic_error("unreachable tunnel class");
}

Fail check_catalan_counting(int lo, int hi, std::string& detail) {
  std::ostringstream counts;
  for (int n = lo; n <= hi; ++n) {
    long long want = catalan(n);
    long long perms = 0, dycks = 0, ants = 0, matchings = 0, rects = 0;
    for_each_avoider(n, [&](const Permutation&) { ++perms; });
    for_each_dyck(n, [&](const DyckWord&) { ++dycks; });
    for_each_antichain(n, [&](const AntichainA&) { ++ants; });
    for_each_matching(n, [&](const NoncrossingMatching&) { ++matchings; });
    for_each_two_row_tableau(2 * n, [&](const Tableau& t) {
      if (t.row_count() == 2 && t.rows()[0].size() == t.rows()[1].size())
        ++rects;
    });
    long long ballot = 0;
    for_each_two_row_tableau(n, [&](const Tableau&) { ++ballot; });
    if (perms != want)
      return at(n) + "S_n(321) has " + std::to_string(perms) + " elements, expected " + std::to_string(want);
    if (dycks != want)
      return at(n) + "D_n has " + std::to_string(dycks) + " elements, expected " + std::to_string(want);
    if (ants != want)
      return at(n) + "A(A^(n-1)) has " + std::to_string(ants) + " elements, expected " + std::to_string(want);
    if (matchings != want)
      return at(n) + "NC_n has " + std::to_string(matchings) + " elements, expected " + std::to_string(want);
    if (rects != want)
      return at(n) + "SYT(n,n) has " + std::to_string(rects) + " elements, expected " + std::to_string(want);
    if (ballot != binomial(n, n / 2))
      return at(n) + "two-row SYT with n boxes: " + std::to_string(ballot) + ", expected C(n, floor(n/2))";
    counts << (n > lo ? " " : "") << want;
  }
  detail = "family sizes " + counts.str();
  return std::nullopt;
}

Fail check_vertex_parity(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_dyck(n, [&](const DyckWord& w) {
      if (fail) return;
      int len = w.length();
      if (w.height(0) != 0 || w.height(len) != 0) {
        fail = at(n) + "word " + w.word() + " does not start and end at height 0";
        return;
      }
      for (int x = 0; x <= len; ++x) {
        int h = w.height(x);
        if (h < 0 || (x + h) % 2 != 0) {
          fail = at(n) + "word " + w.word() + " vertex x=" + std::to_string(x) + " has height " + std::to_string(h);
          return;
        }
      }
      for (auto [x, h] : w.valleys())
        if (w.step(x) != 'D' || w.step(x + 1) != 'U' || w.height(x) != h)
          fail = at(n) + "word " + w.word() + " bad valley at x=" + std::to_string(x);
      for (auto [x, h] : w.peaks())
        if (w.step(x) != 'U' || w.step(x + 1) != 'D' || w.height(x) != h)
          fail = at(n) + "word " + w.word() + " bad peak at x=" + std::to_string(x);
      if (!fail && w.peaks().size() != w.valleys().size() + 1)
        fail = at(n) + "word " + w.word() + " has #peaks != #valleys + 1";
    });
  }
  return fail;
}

Fail check_tunnel_classes(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_dyck(n, [&](const DyckWord& w) {
      if (fail) return;
      // recompute the matched pairs with a plain stack
      std::vector<std::pair<int, int>> pairs;
      std::vector<int> open;
      for (int x = 1; x <= w.length(); ++x) {
        if (w.step(x) == 'U') {
          open.push_back(x);
        } else {
          pairs.emplace_back(open.back(), x);
          open.pop_back();
        }
      }
      std::sort(pairs.begin(), pairs.end());
      auto ts = w.tunnels();
      std::vector<std::pair<int, int>> got;
      for (const auto& t : ts) got.emplace_back(t.open, t.close);
      std::sort(got.begin(), got.end());
      if (got != pairs || static_cast<int>(ts.size()) != n) {
        fail = at(n) + "word " + w.word() + " tunnels disagree with stack matching";
        return;
      }
      for (const auto& t : ts) {
        TunnelClass want;
        if (t.close <= n) want = TunnelClass::left;
        else if (t.open >= n + 1) want = TunnelClass::right;
        else if (t.open + t.close == 2 * n + 1) want = TunnelClass::centered;
        else if (t.open + t.close < 2 * n + 1) want = TunnelClass::left_across;
        else want = TunnelClass::right_across;
        if (t.cls != want) {
          fail = at(n) + "word " + w.word() + " tunnel (" + std::to_string(t.open) + "," + std::to_string(t.close) + ") classified as " + to_string(t.cls);
          return;
        }
      }
      // reflection mirrors every tunnel and swaps left with right
      auto rts = w.reflected().tunnels();
      for (const auto& t : ts) {
        Tunnel m{2 * n + 1 - t.close, 2 * n + 1 - t.open, mirror_class(t.cls)};
        if (std::find(rts.begin(), rts.end(), m) == rts.end()) {
          fail = at(n) + "word " + w.word() + " tunnel (" + std::to_string(t.open) + "," + std::to_string(t.close) + ") has no mirror in the reflected word";
          return;
        }
      }
    });
  }
  return fail;
}

Fail check_rc_involution(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      Permutation rc = p.reverse_complement();
      if (rc.reverse_complement() != p) {
        fail = at(n) + "pi=" + to_text(p) + ": rc(rc(pi)) != pi";
        return;
      }
      if (!rc.is_321_avoiding()) {
        fail = at(n) + "pi=" + to_text(p) + ": rc(pi) contains a 321 pattern";
        return;
      }
      std::vector<int> img(n);
      for (int i = 1; i <= n; ++i) img[n - i] = n + 1 - p(i);
      if (rc != Permutation(img)) {
        fail = at(n) + "pi=" + to_text(p) + ": rc disagrees with rotating the cross array";
        return;
      }
      if (rc.inverse() != p.inverse().reverse_complement()) {
        fail = at(n) + "pi=" + to_text(p) + ": rc does not commute with inversion";
        return;
      }
      if (has_increasing_triple(p.reversed()))
        fail = at(n) + "pi=" + to_text(p) + ": reversal is not 123-avoiding";
    });
  }
  return fail;
}

Fail check_bijection_roundtrips(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      if (e_p_inv(e_p(p)) != p) fail = at(n) + "pi=" + to_text(p) + ": e_p_inv(e_p(pi)) != pi";
      else if (e_v_inv(e_v(p)) != p) fail = at(n) + "pi=" + to_text(p) + ": e_v_inv(e_v(pi)) != pi";
      else if (exc_inv(exc_map(p)) != p) fail = at(n) + "pi=" + to_text(p) + ": exc_inv(exc_map(pi)) != pi";
    });
    if (fail) break;
    for_each_dyck(n, [&](const DyckWord& w) {
      if (fail) return;
      if (ant_inv(ant_map(w)) != w) fail = at(n) + "word " + w.word() + ": ant_inv(ant_map(w)) != w";
      else if (path_map(path_inv(w)) != w) fail = at(n) + "word " + w.word() + ": path_map(path_inv(w)) != w";
      else if (match_inv(match_map(w)) != w) fail = at(n) + "word " + w.word() + ": match_inv(match_map(w)) != w";
      else if (tab_inv(tab(w)) != w) fail = at(n) + "word " + w.word() + ": tab_inv(tab(w)) != w";
    });
    if (fail) break;
    for_each_antichain(n, [&](const AntichainA& a) {
      if (fail) return;
      if (path_inv(path_map(a)) != a) fail = at(n) + "antichain " + to_text(a) + ": path_inv(path_map(a)) != a";
      else if (ant_map(ant_inv(a)) != a) fail = at(n) + "antichain " + to_text(a) + ": ant_map(ant_inv(a)) != a";
    });
    if (fail) break;
    for_each_matching(n, [&](const NoncrossingMatching& m) {
      if (fail) return;
      if (match_map(match_inv(m)) != m)
        fail = at(n) + "matching " + to_text(m) + ": match_map(match_inv(m)) != m";
    });
    if (fail) break;
    for_each_antichain_b(n, [&](const AntichainB& b) {
      if (fail) return;
      if (unhat(hat(b)) != b)
        fail = at(n, 'm') + "antichain " + to_text(b) + ": unhat(hat(b)) != b";
    });
  }
  return fail;
}

Fail check_exc_compositions(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      if (ant_map(e_v(p)) != exc_map(p)) {
        fail = at(n) + "pi=" + to_text(p) + ": ant_map(e_v(pi)) != exc_map(pi)";
        return;
      }
      if (ant_map(d_v(p)) != exc_map(p.inverse())) {
        fail = at(n) + "pi=" + to_text(p) + ": ant_map(d_v(pi)) != exc_map(pi^-1)";
        return;
      }
      if (ant_map(e_p(p)) != exc_map(rowmotion_s(p))) {
        fail = at(n) + "pi=" + to_text(p) + ": ant_map(e_p(pi)) != exc_map(rs(pi))";
        return;
      }
      std::vector<std::pair<int, int>> want_peaks, want_valleys;
      for (auto [i, j] : weak_excedances(p)) want_peaks.emplace_back(i + j - 1, j - i + 1);
      for (auto [i, j] : excedances(p)) want_valleys.emplace_back(i + j - 1, j - i - 1);
      if (e_p(p).peaks() != want_peaks) {
        fail = at(n) + "pi=" + to_text(p) + ": peaks of e_p(pi) are not at the weak excedances";
        return;
      }
      if (e_v(p).valleys() != want_valleys)
        fail = at(n) + "pi=" + to_text(p) + ": valleys of e_v(pi) are not at the excedances";
    });
  }
  return fail;
}

Fail check_dv_equals_lk_ep(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      if (d_v(p) != lk(e_p(p))) fail = at(n) + "pi=" + to_text(p) + ": d_v(pi) != lk(e_p(pi))";
      else if (d_v(p) != e_v(p.inverse())) fail = at(n) + "pi=" + to_text(p) + ": d_v(pi) != e_v(pi^-1)";
    });
  }
  return fail;
}

Fail check_lk_involutions(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_dyck(n, [&](const DyckWord& w) {
      if (fail) return;
      if (lk(lk(w)) != w) fail = at(n) + "word " + w.word() + ": lk(lk(w)) != w";
    });
    if (fail) break;
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      if (lks(lks(p)) != p) fail = at(n) + "pi=" + to_text(p) + ": lks(lks(pi)) != pi";
    });
    if (fail) break;
    for_each_antichain(n, [&](const AntichainA& a) {
      if (fail) return;
      if (lka(lka(a)) != a) fail = at(n) + "antichain " + to_text(a) + ": lka(lka(a)) != a";
    });
  }
  return fail;
}

Fail check_lka_via_ant(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_antichain(n, [&](const AntichainA& a) {
      if (fail) return;
      if (lka(a) != ant_map(lk(ant_inv(a))))
        fail = at(n) + "antichain " + to_text(a) + ": lka(a) != ant_map(lk(ant_inv(a)))";
    });
    if (fail) break;
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      if (lks(p) != e_p_inv(ant_inv(lka(ant_map(e_p(p))))))
        fail = at(n) + "pi=" + to_text(p) + ": lks(pi) != e_p_inv(ant_inv(lka(ant_map(e_p(pi)))))";
    });
  }
  return fail;
}

Fail check_rskd_reflect(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    std::set<std::string> words;
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      DyckWord w = rskd(p);
      words.insert(w.word());
      if (rskd(p.inverse()) != w.reflected())
        fail = at(n) + "pi=" + to_text(p) + ": rskd(pi^-1) != reflect(rskd(pi))";
    });
    if (!fail && static_cast<long long>(words.size()) != catalan(n))
      fail = at(n) + "rskd is not injective on S_n(321)";
  }
  return fail;
}

Fail check_rsk_rows_lds(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      if (fail) return;
      auto [P, Q] = rsk(p);
      if (P.outer() != Q.outer() || !P.is_straight() || !Q.is_straight()) {
        fail = at(n) + "pi=" + to_text(p) + ": rsk pair has mismatched shapes";
        return;
      }
      if (rsk_inv(P, Q) != p) {
        fail = at(n) + "pi=" + to_text(p) + ": rsk_inv(rsk(pi)) != pi";
        return;
      }
      auto [Pi, Qi] = rsk(p.inverse());
      if (Pi != Q || Qi != P) {
        fail = at(n) + "pi=" + to_text(p) + ": rsk(pi^-1) != (Q, P)";
        return;
      }
      if ((P.row_count() <= 2) != p.is_321_avoiding())
        fail = at(n) + "pi=" + to_text(p) + ": rsk shape height disagrees with 321-avoidance";
    });
  }
  return fail;
}

Fail check_rsk_rc_evac(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      if (fail) return;
      auto [P, Q] = rsk(p);
      Permutation rc = p.reverse_complement();
      auto [Pr, Qr] = rsk(rc);
      if (Pr != evacuation(P) || Qr != evacuation(Q)) {
        fail = at(n) + "pi=" + to_text(p) + ": rsk(pi^rc) != (evac(P), evac(Q))";
        return;
      }
      auto [Pri, Qri] = rsk(rc.inverse());
      if (Pri != evacuation(Q) || Qri != evacuation(P))
        fail = at(n) + "pi=" + to_text(p) + ": rsk((pi^rc)^-1) != (evac(Q), evac(P))";
    });
  }
  return fail;
}

Fail check_tab_promotion(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_dyck(n, [&](const DyckWord& w) {
      if (fail) return;
      if (tab(promotion_dyck(w)) != promotion_syt(tab(w)))
        fail = at(n) + "word " + w.word() + ": tab(promotion_dyck(w)) != promotion_syt(tab(w))";
    });
  }
  return fail;
}

Fail check_evac_agreement(int lo, int hi, std::string&) {
  Fail fail;
  for (int boxes = lo; boxes <= hi && !fail; ++boxes) {
    for_each_two_row_tableau(boxes, [&](const Tableau& t) {
      if (fail) return;
      if (evacuation(t) != evac_via_rotation(t))
        fail = at(boxes) + "tableau " + to_text(t) + ": toggle evacuation != rotate-and-rectify evacuation";
      else if (evacuation(evacuation(t)) != t)
        fail = at(boxes) + "tableau " + to_text(t) + ": evacuation is not an involution";
    });
  }
  return fail;
}

Fail check_evac_matching(int lo, int hi, std::string&) {
  Fail fail;
  for (int boxes = lo; boxes <= hi && !fail; ++boxes) {
    for_each_two_row_tableau(boxes, [&](const Tableau& t) {
      if (fail) return;
      PartialMatching before = partial_match(t);
      PartialMatching after = partial_match(evacuation(t));
      std::vector<std::pair<int, int>> arcs;
      for (auto [x, y] : before.arcs()) arcs.emplace_back(boxes + 1 - y, boxes + 1 - x);
      std::sort(arcs.begin(), arcs.end());
      std::vector<int> un;
      for (int v : before.unmatched()) un.push_back(boxes + 1 - v);
      std::sort(un.begin(), un.end());
      if (after.arcs() != arcs || after.unmatched() != un)
        fail = at(boxes) + "tableau " + to_text(t) + ": partial_match(evac(t)) is not the complement relabel of partial_match(t)";
    });
  }
  return fail;
}

Fail check_ra_cross_impl(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_antichain(n, [&](const AntichainA& a) {
      if (fail) return;
      if (rowmotion_a(a) != rowmotion_a_via_transfer(a))
        fail = at(n) + "antichain " + to_text(a) + ": path composition and transfer maps disagree on ra";
      else if (rowmotion_a_inv(a) != rowmotion_a_inv_via_transfer(a))
        fail = at(n) + "antichain " + to_text(a) + ": path composition and transfer maps disagree on ra-inv";
      else if (rowmotion_a_inv(rowmotion_a(a)) != a)
        fail = at(n) + "antichain " + to_text(a) + ": ra-inv(ra(a)) != a";
      else if (rowmotion_a(rowmotion_a_inv(a)) != a)
        fail = at(n) + "antichain " + to_text(a) + ": ra(ra-inv(a)) != a";
    });
  }
  return fail;
}

Fail check_rs_cross_impl(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      if (rowmotion_s(p) != rowmotion_s_via_antichains(p))
        fail = at(n) + "pi=" + to_text(p) + ": path composition and antichain conjugation disagree on rs";
      else if (rowmotion_s_inv(rowmotion_s(p)) != p)
        fail = at(n) + "pi=" + to_text(p) + ": rs-inv(rs(pi)) != pi";
      else if (rowmotion_s(rowmotion_s_inv(p)) != p)
        fail = at(n) + "pi=" + to_text(p) + ": rs(rs-inv(pi)) != pi";
    });
  }
  return fail;
}

Fail check_ri_conjugation(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_antichain(n, [&](const AntichainA& a) {
      if (fail) return;
      OrderSubset ideal = ideal_generated(a);
      OrderSubset filter = filter_generated(a);
      if (maximal_elements(ideal) != a || minimal_elements(filter) != a) {
        fail = at(n) + "antichain " + to_text(a) + ": transfer maps do not invert each other";
        return;
      }
      if (complement(complement(ideal)) != ideal) {
        fail = at(n) + "antichain " + to_text(a) + ": complement is not an involution";
        return;
      }
      if (rowmotion_i(ideal) != ideal_generated(rowmotion_a(a))) {
        fail = at(n) + "antichain " + to_text(a) + ": ri != ideal_generated . ra . maximal_elements";
        return;
      }
      if (rowmotion_f(complement(ideal)) != complement(rowmotion_i(ideal)))
        fail = at(n) + "antichain " + to_text(a) + ": rf . complement != complement . ri";
    });
  }
  return fail;
}

Fail check_rs_path_halves(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      Permutation s = rowmotion_s(p);
      if (e_v(s) != e_p(p)) fail = at(n) + "pi=" + to_text(p) + ": e_v(rs(pi)) != e_p(pi)";
      else if (e_p(s) != rowmotion_d(e_p(p))) fail = at(n) + "pi=" + to_text(p) + ": e_p(rs(pi)) != rd(e_p(pi))";
      else if (d_v(s) != rowmotion_d_inv(d_v(p))) fail = at(n) + "pi=" + to_text(p) + ": d_v(rs(pi)) != rd-inv(d_v(pi))";
    });
    if (fail) break;
    for_each_dyck(n, [&](const DyckWord& w) {
      if (fail) return;
      if (ant_map(rowmotion_d(w)) != rowmotion_a(ant_map(w)))
        fail = at(n) + "word " + w.word() + ": ant_map(rd(w)) != ra(ant_map(w))";
      else if (rowmotion_d_inv(rowmotion_d(w)) != w)
        fail = at(n) + "word " + w.word() + ": rd-inv(rd(w)) != w";
    });
    if (fail) break;
    for_each_antichain(n, [&](const AntichainA& a) {
      if (fail) return;
      if (rowmotion_d(path_map(a)) != path_map(rowmotion_a(a)))
        fail = at(n) + "antichain " + to_text(a) + ": rd(path_map(a)) != path_map(ra(a))";
    });
  }
  return fail;
}

Fail check_pan_relation(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_antichain(n, [&](const AntichainA& a) {
      if (fail) return;
      if (lka(rowmotion_a(a)) != rowmotion_a_inv(lka(a)))
        fail = at(n) + "antichain " + to_text(a) + ": lka(ra(a)) != ra-inv(lka(a))";
    });
    if (fail) break;
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      Permutation s = rowmotion_s(p);
      if (exc_map(s) != rowmotion_a(exc_map(p)))
        fail = at(n) + "pi=" + to_text(p) + ": exc_map(rs(pi)) != ra(exc_map(pi))";
      else if (exc_map(s.inverse()) != rowmotion_a_inv(exc_map(p.inverse())))
        fail = at(n) + "pi=" + to_text(p) + ": exc_map(rs(pi)^-1) != ra-inv(exc_map(pi^-1))";
    });
  }
  return fail;
}

Fail check_perm_inverse_lemma(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      if (rowmotion_s(lks(p)) != p.inverse())
        fail = at(n) + "pi=" + to_text(p) + ": rs(lks(pi)) != pi^-1";
      else if (lks(rowmotion_s_inv(p)) != p.inverse())
        fail = at(n) + "pi=" + to_text(p) + ": lks(rs-inv(pi)) != pi^-1";
    });
  }
  return fail;
}

Fail check_conjugation_chain(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      Permutation left = lks(rowmotion_s_inv(p));
      Permutation middle = rowmotion_s(lks(p));
      Permutation right = exc_inv(lka(rowmotion_a(exc_map(p))));
      if (left != middle || middle != right)
        fail = at(n) + "pi=" + to_text(p) + ": lks . rs-inv, rs . lks and exc-conjugated lka . ra disagree";
    });
  }
  return fail;
}

Fail check_ra_n_reflect(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_antichain(n, [&](const AntichainA& a) {
      if (fail) return;
      AntichainA b = a;
      for (int k = 0; k < n; ++k) b = rowmotion_a(b);
      if (b != vertical_reflection(a)) {
        fail = at(n) + "antichain " + to_text(a) + ": ra^n(a) is not the vertical reflection";
        return;
      }
      for (int k = 0; k < n; ++k) b = rowmotion_a(b);
      if (b != a)
        fail = at(n) + "antichain " + to_text(a) + ": ra^(2n)(a) != a";
    });
  }
  return fail;
}

Fail check_orbit_divides(int lo, int hi, std::string& detail) {
  Fail fail;
  std::ostringstream info;
  for (int n = lo; n <= hi && !fail; ++n) {
    std::set<std::string> seen;
    int orbits = 0;
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail || seen.count(to_text(p))) return;
      auto orb = orbit_elements(p, [](const Permutation& q) { return rowmotion_s(q); });
      for (const auto& q : orb) seen.insert(to_text(q));
      ++orbits;
      if ((2 * n) % static_cast<int>(orb.size()) != 0)
        fail = at(n) + "pi=" + to_text(p) + ": rs orbit size " + std::to_string(orb.size()) + " does not divide 2n";
    });
    info << (n > lo ? ", " : "") << "n=" << n << ": " << orbits << " rs orbits";
    if (fail) break;
    seen.clear();
    for_each_antichain(n, [&](const AntichainA& a) {
      if (fail || seen.count(to_text(a))) return;
      auto orb = orbit_elements(a, [](const AntichainA& b) { return rowmotion_a(b); });
      for (const auto& b : orb) seen.insert(to_text(b));
      if ((2 * n) % static_cast<int>(orb.size()) != 0)
        fail = at(n) + "antichain " + to_text(a) + ": ra orbit size " + std::to_string(orb.size()) + " does not divide 2n";
    });
    if (fail) break;
    seen.clear();
    for_each_dyck(n, [&](const DyckWord& w) {
      if (fail || seen.count(w.word())) return;
      auto orb = orbit_elements(w, [](const DyckWord& v) { return rowmotion_d(v); });
      for (const auto& v : orb) seen.insert(v.word());
      if ((2 * n) % static_cast<int>(orb.size()) != 0)
        fail = at(n) + "word " + w.word() + ": rd orbit size " + std::to_string(orb.size()) + " does not divide 2n";
    });
    if (fail) break;
    seen.clear();
    for_each_matching(n, [&](const NoncrossingMatching& m) {
      if (fail || seen.count(to_text(m))) return;
      auto orb = orbit_elements(m, [](const NoncrossingMatching& x) { return rotate(x); });
      for (const auto& x : orb) seen.insert(to_text(x));
      if ((2 * n) % static_cast<int>(orb.size()) != 0)
        fail = at(n) + "matching " + to_text(m) + ": rotation orbit size " + std::to_string(orb.size()) + " does not divide 2n";
    });
  }
  if (!fail) detail = info.str();
  return fail;
}

Fail check_rskd_promotion(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      if (rskd(rowmotion_s(p)) != promotion_dyck_inv(rskd(p)))
        fail = at(n) + "pi=" + to_text(p) + ": rskd(rs(pi)) != promotion_dyck_inv(rskd(pi))";
    });
    if (fail) break;
    for_each_dyck(n, [&](const DyckWord& w) {
      if (fail) return;
      if (promotion_dyck_inv(promotion_dyck(w)) != w)
        fail = at(n) + "word " + w.word() + ": pro-inv(pro(w)) != w";
      else if (promotion_dyck(promotion_dyck_inv(w)) != w)
        fail = at(n) + "word " + w.word() + ": pro(pro-inv(w)) != w";
    });
  }
  return fail;
}

Fail check_ast_equivariance(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_antichain(n, [&](const AntichainA& a) {
      if (fail) return;
      if (ast(rowmotion_a(a)) != rotate(ast(a)))
        fail = at(n) + "antichain " + to_text(a) + ": ast(ra(a)) != rotate(ast(a))";
    });
  }
  return fail;
}

Fail check_ast_equals_rskd(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_antichain(n, [&](const AntichainA& a) {
      if (fail) return;
      if (ast(a) != match_map(rskd(exc_inv(a))))
        fail = at(n) + "antichain " + to_text(a) + ": ast(a) != match_map(rskd(exc_inv(a)))";
    });
  }
  return fail;
}

Fail check_bottoms_roundtrip(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    std::set<std::vector<int>> bottom_sets;
    for_each_matching(n, [&](const NoncrossingMatching& m) {
      if (fail) return;
      std::vector<int> b = bottoms(m);
      bottom_sets.insert(b);
      if (static_cast<int>(b.size()) != n || !std::is_sorted(b.begin(), b.end()) ||
          std::adjacent_find(b.begin(), b.end()) != b.end()) {
        fail = at(n) + "matching " + to_text(m) + ": bottom set is not n distinct sorted vertices";
        return;
      }
      if (matching_from_bottoms(b, n) != m)
        fail = at(n) + "matching " + to_text(m) + ": matching_from_bottoms(bottoms(m)) != m";
    });
    if (!fail && static_cast<long long>(bottom_sets.size()) != catalan(n))
      fail = at(n) + "two distinct matchings share a bottom set";
  }
  return fail;
}

Fail check_bottoms_exc(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      std::vector<int> want;
      for (int i = 1; i <= n; ++i) want.push_back(p(i) > i ? p(i) : 2 * n + 1 - i);
      std::sort(want.begin(), want.end());
      if (bottoms(ast(exc_map(p))) != want) {
        fail = at(n) + "pi=" + to_text(p) + ": bottoms(ast(exc_map(pi))) are not the excedance values plus mirrored weak deficiency positions";
        return;
      }
      std::vector<int> fps, centered;
      for (int i = 1; i <= n; ++i)
        if (p(i) == i) fps.push_back(i);
      for (const auto& t : rskd(p).tunnels())
        if (t.cls == TunnelClass::centered) centered.push_back(t.open);
      std::sort(centered.begin(), centered.end());
      if (fps != centered)
        fail = at(n) + "pi=" + to_text(p) + ": fixed points do not match the centered tunnels of rskd(pi)";
    });
  }
  return fail;
}

Fail check_fp_homomesy(int lo, int hi, std::string& detail) {
  std::ostringstream info;
  for (int n = lo; n <= hi; ++n) {
    HomomesyReport r = homomesy_report("fp", "rs", n);
    if (!r.homomesic || r.c != Rational(1)) {
      for (const auto& o : r.orbits)
        if (o.average != Rational(1))
          return at(n) + "rs orbit of " + o.representative + " has fp average " + o.average.str();
      return at(n) + "fp report not 1-mesic";
    }
    info << (n > lo ? ", " : "") << "n=" << n << ": " << r.orbit_count << " orbits, all fp averages 1";
  }
  detail = info.str();
  return std::nullopt;
}

Fail check_hi_homomesy(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for (int i = 1; i <= n - 1 && !fail; ++i) {
      std::string name = "h" + std::to_string(i);
      HomomesyReport rs_report = homomesy_report(name, "rs", n);
      if (!rs_report.homomesic || rs_report.c != Rational(1)) {
        fail = at(n) + name + " is not 1-mesic under rs";
        break;
      }
      HomomesyReport ra_report = homomesy_report(name, "ra", n);
      if (!ra_report.homomesic || ra_report.c != Rational(1))
        fail = at(n) + name + " is not 1-mesic under ra";
    }
    if (fail) break;
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      AntichainA a = exc_map(p);
      for (int i = 1; i <= n - 1; ++i)
        if (h_perm(i, p) != h_antichain(i, a)) {
          fail = at(n) + "pi=" + to_text(p) + ": h_" + std::to_string(i) + "(pi) != h_" + std::to_string(i) + "(exc_map(pi))";
          return;
        }
    });
  }
  return fail;
}

Fail check_li_homomesy(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for (int i = 1; i <= n && !fail; ++i) {
      std::string name = "l" + std::to_string(i);
      HomomesyReport r = homomesy_report(name, "rs", n);
      if (!r.homomesic || r.c != Rational(1))
        fail = at(n) + name + " is not 1-mesic under rs";
    }
    if (fail) break;
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      if (l_perm(1, p) != 1 || l_perm(n, p) != 1) {
        fail = at(n) + "pi=" + to_text(p) + ": l_1 or l_n differs from 1";
        return;
      }
      AntichainA a = exc_map(rowmotion_s(p));
      for (int i = 1; i <= n; ++i)
        if (l_perm(i, p) != l_antichain(i, a)) {
          fail = at(n) + "pi=" + to_text(p) + ": l_" + std::to_string(i) + "(pi) != l_" + std::to_string(i) + "(exc_map(rs(pi)))";
          return;
        }
    });
  }
  return fail;
}

Fail check_card_homomesy(int lo, int hi, std::string& detail) {
  std::ostringstream info;
  for (int n = lo; n <= hi; ++n) {
    HomomesyReport r = homomesy_report("card", "ra", n);
    if (!r.homomesic || r.c != Rational(n - 1, 2))
      return at(n) + "card is not (n-1)/2-mesic under ra";
    info << (n > lo ? ", " : "") << "n=" << n << ": c=" << r.c->str();
  }
  detail = info.str();
  return std::nullopt;
}

Fail check_fp_sum_identity(int lo, int hi, std::string& detail) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      long long fp = fixed_points(p);
      long long lsum = 0, hsum = 0;
      for (int i = 1; i <= n; ++i) lsum += l_perm(i, p);
      for (int i = 1; i <= n - 1; ++i) hsum += h_perm(i, p);
      if (fp != lsum - hsum) {
        fail = at(n) + "pi=" + to_text(p) + ": fp != sum(l_i) - sum(h_i)";
        return;
      }
      if (fp != n - excedance_count(p) - excedance_count(p.inverse())) {
        fail = at(n) + "pi=" + to_text(p) + ": fp != n - exc(pi) - exc(pi^-1)";
        return;
      }
      if (fp != weak_excedance_count(p) - excedance_count(p)) {
        fail = at(n) + "pi=" + to_text(p) + ": fp != wexc - exc";
        return;
      }
      if (fp_antichain(exc_map(rowmotion_s(p))) != fp) {
        fail = at(n) + "pi=" + to_text(p) + ": fp_antichain(exc_map(rs(pi))) != fp(pi)";
        return;
      }
      inversions(p);  // internal weak excedance cross-check throws on mismatch
    });
  }
  if (!fail && lo <= 4 && 4 <= hi) {
    if (homomesy_report("inv", "rs", 4).homomesic)
      return std::string("n=4 inv is unexpectedly homomesic under rs");
    detail = "negative control: inv is not homomesic under rs at n=4";
  }
  return fail;
}

Fail check_sign(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    long long odd = 0, even = 0;
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      (sign(p) == 1 ? even : odd) += 1;
      int expect = n % 2 == 1 ? sign(p) : -sign(p);
      if (sign(rowmotion_s(p)) != expect) {
        fail = at(n) + "pi=" + to_text(p) + ": sgn(rs(pi)) has the wrong parity behavior";
        return;
      }
      if (sign(lks(p)) != expect)
        fail = at(n) + "pi=" + to_text(p) + ": sgn(lks(pi)) != sgn(rs(pi))";
    });
    if (fail) break;
    if (n % 2 == 0) {
      if (odd != even) {
        fail = at(n) + "S_n(321) does not split evenly by sign (" + std::to_string(even) + " even, " + std::to_string(odd) + " odd)";
        break;
      }
      HomomesyReport r = homomesy_report("sgn", "rs", n);
      if (!r.homomesic || r.c != Rational(0))
        fail = at(n) + "sgn is not 0-mesic under rs";
    }
  }
  return fail;
}

Fail check_lk_fixed_even(int lo, int hi, std::string& detail) {
  Fail fail;
  std::ostringstream info;
  for (int n = lo; n <= hi && !fail; ++n) {
    long long fixed_words = 0;
    std::string witness;
    for_each_dyck(n, [&](const DyckWord& w) {
      if (lk(w) == w) {
        ++fixed_words;
        witness = w.word();
      }
    });
    if (n % 2 == 0 && fixed_words > 0) {
      fail = at(n) + "lk fixes " + witness + " although n is even";
      break;
    }
    long long fixed_perms = 0;
    for_each_avoider(n, [&](const Permutation& p) {
      if (lks(p) == p) ++fixed_perms;
    });
    if (n % 2 == 0 && fixed_perms > 0) {
      fail = at(n) + "lks has a fixed point although n is even";
      break;
    }
    if (fixed_perms != fixed_words) {
      fail = at(n) + "lk and lks have different fixed point counts";
      break;
    }
    info << (n > lo ? ", " : "") << "n=" << n << ": " << fixed_words << " fixed";
  }
  if (!fail) detail = info.str();
  return fail;
}

Fail check_upshift(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      Permutation s = rowmotion_s(p);
      Permutation pinv = p.inverse();
      Permutation sinv = s.inverse();
      for (int i = 1; i <= n - 1; ++i)
        if ((pinv(i) <= i) != (sinv(i + 1) < i + 1)) {
          fail = at(n) + "pi=" + to_text(p) + ": row shift fails at i=" + std::to_string(i);
          return;
        }
      for (int i = 2; i <= n; ++i)
        if ((p(i) >= i) != (s(i - 1) > i - 1)) {
          fail = at(n) + "pi=" + to_text(p) + ": column shift fails at i=" + std::to_string(i);
          return;
        }
    });
  }
  return fail;
}

Fail check_orbit_exc_structure(int lo, int hi, std::string&) {
  Fail fail;
  for (int n = lo; n <= hi && !fail; ++n) {
    std::set<std::string> seen;
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail || seen.count(to_text(p))) return;
      auto orb = orbit_elements(p, [](const Permutation& q) { return rowmotion_s(q); });
      std::set<std::string> excs, inv_excs;
      for (const auto& q : orb) {
        seen.insert(to_text(q));
        excs.insert(to_text(exc_map(q)));
        inv_excs.insert(to_text(exc_map(q.inverse())));
      }
      if (excs.size() != orb.size() || inv_excs.size() != orb.size()) {
        fail = at(n) + "pi=" + to_text(p) + ": exc_map is not injective on the rs orbit";
        return;
      }
      for (const auto& q : orb) {
        if (!excs.count(to_text(rowmotion_a(exc_map(q))))) {
          fail = at(n) + "pi=" + to_text(p) + ": {exc_map(orbit)} is not closed under ra";
          return;
        }
        if (!inv_excs.count(to_text(rowmotion_a_inv(exc_map(q.inverse()))))) {
          fail = at(n) + "pi=" + to_text(p) + ": {exc_map(inverse orbit)} is not closed under ra-inv";
          return;
        }
      }
      auto ra_orbit = orbit_elements(exc_map(p), [](const AntichainA& a) { return rowmotion_a(a); });
      if (ra_orbit.size() != orb.size())
        fail = at(n) + "pi=" + to_text(p) + ": ra orbit of exc_map(pi) has a different size";
    });
  }
  return fail;
}

Fail check_lka_ra_count(int lo, int hi, std::string& detail) {
  std::ostringstream counts;
  for (int n = lo; n <= hi; ++n) {
    long long got = count_fixed_lka_ra(n);
    long long want = binomial(n, n / 2);
    long long oracle = count_avoiding_involutions(n);
    if (got != want)
      return at(n) + "lka . ra fixes " + std::to_string(got) + " antichains, expected C(n, floor(n/2)) = " + std::to_string(want);
    if (oracle != want)
      return at(n) + "321-avoiding involution count " + std::to_string(oracle) + " != C(n, floor(n/2))";
    counts << (n > lo ? "," : "") << got;
  }
  detail = "counts " + counts.str() + " for n=" + std::to_string(lo) + ".." + std::to_string(hi);
  return std::nullopt;
}

Fail check_lka_ra_count_b(int lo, int hi, std::string& detail) {
  std::ostringstream counts;
  for (int m = lo; m <= hi; ++m) {
    long long got = count_fixed_lka_ra_b(m);
    long long want = 1LL << m;
    long long oracle = count_123_involutions_rc_fixed(2 * m);
    if (got != want)
      return at(m, 'm') + "lka . ra fixes " + std::to_string(got) + " hatted antichains, expected 2^m = " + std::to_string(want);
    if (oracle != want)
      return at(m, 'm') + "rc-fixed 123-avoiding involution count " + std::to_string(oracle) + " != 2^m";
    counts << (m > lo ? "," : "") << got;
  }
  detail = "counts " + counts.str() + " for m=" + std::to_string(lo) + ".." + std::to_string(hi);
  return std::nullopt;
}

Fail check_central_symmetry(int lo, int hi, std::string& detail) {
  Fail fail;
  std::ostringstream info;
  for (int n = lo; n <= hi && !fail; ++n) {
    std::set<std::string> images;
    long long selfconj = 0;
    for_each_avoider(n, [&](const Permutation& p) {
      if (fail) return;
      bool rc_inverse_fixed = p == p.reverse_complement().inverse();
      if (exc_map(p.reverse_complement().inverse()) != vertical_reflection(exc_map(p))) {
        fail = at(n) + "pi=" + to_text(p) + ": exc_map((pi^rc)^-1) != reflected exc_map(pi)";
        return;
      }
      if (!rc_inverse_fixed) return;
      ++selfconj;
      NoncrossingMatching m = match_map(rskd(p));
      if (!is_centrally_symmetric(m)) {
        fail = at(n) + "pi=" + to_text(p) + ": match_map(rskd(pi)) is not centrally symmetric";
        return;
      }
      images.insert(to_text(m));
    });
    if (fail) break;
    long long csnc = 0;
    for_each_matching(n, [&](const NoncrossingMatching& m) {
      if (is_centrally_symmetric(m)) ++csnc;
    });
    if (static_cast<long long>(images.size()) != selfconj || selfconj != csnc) {
      fail = at(n) + "match_map . rskd does not biject rc-inverse-fixed permutations (" + std::to_string(selfconj) + ") onto centrally symmetric matchings (" + std::to_string(csnc) + ")";
      break;
    }
    if (n % 2 == 0 && selfconj != binomial(n, n / 2)) {
      fail = at(n) + "rc-inverse-fixed count " + std::to_string(selfconj) + " != C(n, n/2)";
      break;
    }
    info << (n > lo ? ", " : "") << "n=" << n << ": " << csnc << " csnc";
  }
  if (!fail) detail = info.str();
  return fail;
}

Fail check_csnc_typeb(int lo, int hi, std::string& detail) {
  Fail fail;
  std::ostringstream info;
  for (int m = lo; m <= hi && !fail; ++m) {
    std::set<std::string> images;
    long long total = 0;
    for_each_antichain_b(m, [&](const AntichainB& a) {
      if (fail) return;
      ++total;
      AntichainA h = hat(a);
      if (h != vertical_reflection(h)) {
        fail = at(m, 'm') + "antichain " + to_text(a) + ": hat(a) is not reflection invariant";
        return;
      }
      NoncrossingMatching M = ast_b(a);
      if (!is_centrally_symmetric(M)) {
        fail = at(m, 'm') + "antichain " + to_text(a) + ": ast_b(a) is not centrally symmetric";
        return;
      }
      NoncrossingMatching R = M;
      for (int k = 0; k < 2 * m; ++k) R = rotate(R);
      if (R != M) {
        fail = at(m, 'm') + "antichain " + to_text(a) + ": rot^(2m)(ast_b(a)) != ast_b(a)";
        return;
      }
      images.insert(to_text(M));
    });
    if (fail) break;
    long long csnc = 0;
    for_each_matching(2 * m, [&](const NoncrossingMatching& x) {
      if (is_centrally_symmetric(x)) ++csnc;
    });
    long long want = binomial(2 * m, m);
    if (total != want || static_cast<long long>(images.size()) != want || csnc != want) {
      fail = at(m, 'm') + "ast_b image size " + std::to_string(images.size()) + ", domain " + std::to_string(total) + ", csnc count " + std::to_string(csnc) + ", expected C(2m,m) = " + std::to_string(want);
      break;
    }
    info << (m > lo ? ", " : "") << "m=" << m << ": " << want << " csnc";
  }
  if (!fail) detail = info.str();
  return fail;
}

std::vector<TheoremCheck> build_checks() {
  std::vector<TheoremCheck> checks;
  auto add = [&](const char* id, const char* description, char param, int lo,
                 int hi, auto fn) {
    checks.push_back({id, description, param, lo, hi, fn});
  };

  add("catalan-counting", "permutations, paths, antichains, matchings and rectangular tableaux are equinumerous", 'n', 1, 10, check_catalan_counting);
  add("vertex-parity", "Dyck path vertices satisfy the parity and nonnegativity constraints", 'n', 1, 8, check_vertex_parity);
  add("tunnel-classes", "tunnels match the stack pairing and their five classes partition correctly", 'n', 1, 8, check_tunnel_classes);
  add("rc-involution", "reverse complement is an involution compatible with inversion and reversal", 'n', 1, 8, check_rc_involution);
  add("bijection-roundtrips", "every bijection composed with its inverse is the identity", 'n', 1, 8, check_bijection_roundtrips);
  add("exc-compositions", "excedance antichains agree with the valley and peak readings of the path maps", 'n', 1, 8, check_exc_compositions);
  add("dv-equals-lk-ep", "the deficiency path equals lk of the weak excedance path", 'n', 1, 8, check_dv_equals_lk_ep);
  add("lk-involutions", "lk, lks and lka are involutions", 'n', 1, 8, check_lk_involutions);
  add("lka-via-ant", "lka is the valley-antichain conjugate of lk", 'n', 1, 8, check_lka_via_ant);
  add("rskd-reflect", "rskd is injective and sends inversion to path reflection", 'n', 1, 8, check_rskd_reflect);
  add("rsk-rows-lds", "rsk shapes have height at most two exactly on 321-avoiders and insertion inverts", 'n', 1, 6, check_rsk_rows_lds);
  add("rsk-rc-evac", "rsk of the reverse complement evacuates both tableaux", 'n', 1, 7, check_rsk_rc_evac);
  add("tab-promotion", "the two-row tableau map intertwines Dyck and tableau promotion", 'n', 1, 8, check_tab_promotion);
  add("evac-agreement", "toggle evacuation equals rotate-and-rectify evacuation", 'n', 1, 10, check_evac_agreement);
  add("evac-matching", "evacuation acts on lattice matchings as the complement relabeling", 'n', 1, 10, check_evac_matching);
  add("ra-cross-impl", "antichain rowmotion via paths equals the transfer map composition", 'n', 1, 8, check_ra_cross_impl);
  add("rs-cross-impl", "permutation rowmotion via paths equals the antichain conjugation", 'n', 1, 8, check_rs_cross_impl);
  add("ri-conjugation", "ideal and filter rowmotion are conjugates of antichain rowmotion", 'n', 1, 8, check_ri_conjugation);
  add("rs-path-halves", "rowmotion shifts the upper path to the lower path and commutes along ant", 'n', 1, 8, check_rs_path_halves);
  add("pan-relation", "lka conjugates ra to its inverse, matching the excedance translations", 'n', 1, 8, check_pan_relation);
  add("perm-inverse-lemma", "rs(lks(pi)) and lks(rs-inv(pi)) both invert pi", 'n', 1, 8, check_perm_inverse_lemma);
  add("conjugation-chain", "lks . rs-inv = rs . lks = exc-conjugate of lka . ra", 'n', 1, 7, check_conjugation_chain);
  add("ra-n-reflect", "n steps of antichain rowmotion reflect the antichain", 'n', 1, 8, check_ra_n_reflect);
  add("orbit-divides", "orbit sizes of rs, ra, rd and rotation divide 2n", 'n', 1, 8, check_orbit_divides);
  add("rskd-promotion", "rskd intertwines rowmotion with inverse promotion", 'n', 1, 8, check_rskd_promotion);
  add("ast-equivariance", "ast intertwines antichain rowmotion with matching rotation", 'n', 1, 7, check_ast_equivariance);
  add("ast-equals-rskd", "ast equals the tunnel matching of the rskd path", 'n', 1, 7, check_ast_equals_rskd);
  add("bottoms-roundtrip", "a noncrossing matching is determined by its bottom set", 'n', 1, 6, check_bottoms_roundtrip);
  add("bottoms-exc", "bottoms of ast(exc_map(pi)) read off excedance values and weak deficiency mirrors", 'n', 1, 7, check_bottoms_exc);
  add("fp-homomesy", "fp is 1-mesic under rs", 'n', 1, 8, check_fp_homomesy);
  add("hi-homomesy", "each h_i is 1-mesic under rs and under ra", 'n', 1, 8, check_hi_homomesy);
  add("li-homomesy", "each l_i is 1-mesic under rs", 'n', 1, 8, check_li_homomesy);
  add("card-homomesy", "antichain cardinality is (n-1)/2-mesic under ra", 'n', 1, 8, check_card_homomesy);
  add("fp-sum-identity", "fp decomposes through l_i, h_i, excedances and the antichain translation", 'n', 1, 8, check_fp_sum_identity);
  add("sign", "rowmotion preserves sign for odd n and flips it for even n", 'n', 1, 8, check_sign);
  add("lk-fixed-even", "lk and lks are fixed point free for even n", 'n', 1, 10, check_lk_fixed_even);
  add("upshift", "weak excedance rows and columns shift by one under rowmotion", 'n', 1, 8, check_upshift);
  add("orbit-exc-structure", "excedance antichains of an rs orbit form complete ra orbits", 'n', 1, 8, check_orbit_exc_structure);
  add("lka-ra-count", "lka . ra fixes exactly C(n, floor(n/2)) antichains", 'n', 2, 10, check_lka_ra_count);
  add("lka-ra-count-b", "lka . ra fixes exactly 2^m hatted type B antichains", 'm', 1, 5, check_lka_ra_count_b);
  add("central-symmetry", "match_map . rskd bijects rc-inverse-fixed permutations onto centrally symmetric matchings", 'n', 1, 8, check_central_symmetry);
  add("csnc-typeb", "ast_b bijects type B antichains onto centrally symmetric matchings", 'm', 1, 4, check_csnc_typeb);

  return checks;
}

}  // namespace

const std::vector<TheoremCheck>& theorem_checks() {
  static const std::vector<TheoremCheck> checks = build_checks();
  return checks;
}

const TheoremCheck* find_theorem(const std::string& id) {
  for (const auto& check : theorem_checks())
    if (check.id == id) return &check;
  return nullptr;
}

VerificationResult run_theorem(const TheoremCheck& check,
                               std::optional<int> hi_override) {
  int hi = hi_override.value_or(check.default_hi);
  if (hi < 1) throw std::invalid_argument("verification range must be at least 1");
  int lo = std::min(check.default_lo, hi);

  VerificationResult result;
  result.id = check.id;
  result.range = std::string(1, check.param) + "=" + std::to_string(lo) + ".." +
                 std::to_string(hi);
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  auto counterexample = check.run(lo, hi, detail);
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  result.pass = !counterexample.has_value();
  if (counterexample) result.counterexample = *counterexample;
  result.detail = detail;
  return result;
}

}  // namespace combdyn
