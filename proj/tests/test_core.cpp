#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "combdyn/antichain.hpp"
#include "combdyn/dyck_word.hpp"
#include "combdyn/enumerate.hpp"
#include "combdyn/matching.hpp"
#include "combdyn/permutation.hpp"
#include "combdyn/rational.hpp"
#include "combdyn/serialize.hpp"
#include "combdyn/tableau.hpp"

using namespace combdyn;

TEST_CASE("permutation basics") {
  Permutation p({2, 4, 1, 3, 5, 8, 9, 6, 7});
  CHECK(p.size() == 9);
  CHECK(p(1) == 2);
  CHECK(p(9) == 7);
  CHECK(p.inverse()(2) == 1);
  CHECK(p.inverse().inverse() == p);
  CHECK(Permutation::identity(4) == Permutation({1, 2, 3, 4}));

  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 3, 4}), std::invalid_argument);
}

TEST_CASE("pattern avoidance") {
  CHECK(Permutation({2, 4, 1, 3, 5, 8, 9, 6, 7}).is_321_avoiding());
  CHECK(Permutation({1}).is_321_avoiding());
  CHECK_FALSE(Permutation({3, 2, 1}).is_321_avoiding());
  CHECK_FALSE(Permutation({1, 5, 4, 2, 3}).is_321_avoiding());
  CHECK_THROWS_AS(require_321_avoiding(Permutation({3, 2, 1})),
                  std::domain_error);

  // avoidance counted against a brute cubic oracle
  for (int n = 1; n <= 6; ++n) {
    long long fast = 0, brute = 0;
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    do {
      Permutation q(img);
      if (q.is_321_avoiding()) ++fast;
      bool has = false;
      for (int a = 0; a < n && !has; ++a)
        for (int b = a + 1; b < n && !has; ++b)
          for (int c = b + 1; c < n && !has; ++c)
            has = img[a] > img[b] && img[b] > img[c];
      if (!has) ++brute;
    } while (std::next_permutation(img.begin(), img.end()));
    CHECK(fast == brute);
    CHECK(fast == catalan(n));
  }
}

TEST_CASE("reverse complement") {
  // rc(pi)(i) = n+1-pi(n+1-i)
  CHECK(Permutation({4, 1, 2, 3, 5}).reverse_complement() ==
        Permutation({1, 3, 4, 5, 2}));
  Permutation p({3, 5, 1, 2, 4});
  CHECK(p.reverse_complement().reverse_complement() == p);
  CHECK(p.reverse_complement().inverse() ==
        p.inverse().reverse_complement());
  CHECK(Permutation({1, 3, 2}).reversed() == Permutation({2, 3, 1}));
}

TEST_CASE("excedances") {
  Permutation p({2, 4, 1, 3, 5, 8, 9, 6, 7});
  std::vector<std::pair<int, int>> exc{{1, 2}, {2, 4}, {6, 8}, {7, 9}};
  CHECK(excedances(p) == exc);
  std::vector<std::pair<int, int>> wexc{{1, 2}, {2, 4}, {5, 5}, {6, 8}, {7, 9}};
  CHECK(weak_excedances(p) == wexc);
  CHECK(Permutation({1, 2}).is_involution());
  CHECK_FALSE(Permutation({2, 3, 1}).is_involution());
}

TEST_CASE("dyck word geometry") {
  DyckWord d("UUUDUDDDUD");
  CHECK(d.semilength() == 5);
  CHECK(d.length() == 10);
  CHECK(d.step(1) == 'U');
  CHECK(d.step(4) == 'D');
  CHECK(d.height(0) == 0);
  CHECK(d.height(3) == 3);
  CHECK(d.height(10) == 0);

  std::vector<std::pair<int, int>> valleys{{4, 2}, {8, 0}};
  CHECK(d.valleys() == valleys);
  std::vector<std::pair<int, int>> peaks{{3, 3}, {5, 3}, {9, 1}};
  CHECK(d.peaks() == peaks);

  CHECK_THROWS_AS(DyckWord("UDD"), std::invalid_argument);
  CHECK_THROWS_AS(DyckWord("DU"), std::invalid_argument);
  CHECK_THROWS_AS(DyckWord("UX"), std::invalid_argument);
}

TEST_CASE("tunnels and their classes") {
  // tunnels come out in closing order
  DyckWord d("UUUDUDDDUD");
  auto ts = d.tunnels();
  REQUIRE(ts.size() == 5);
  CHECK(ts[0] == Tunnel{3, 4, TunnelClass::left});
  CHECK(ts[1] == Tunnel{5, 6, TunnelClass::centered});
  CHECK(ts[2] == Tunnel{2, 7, TunnelClass::left_across});
  CHECK(ts[3] == Tunnel{1, 8, TunnelClass::left_across});
  CHECK(ts[4] == Tunnel{9, 10, TunnelClass::right});

  // reflection swaps left with right and left_across with right_across
  CHECK(d.reflected().word() == "UDUUUDUDDD");
  auto rs = d.reflected().tunnels();
  REQUIRE(rs.size() == 5);
  CHECK(rs[0] == Tunnel{1, 2, TunnelClass::left});
  CHECK(rs[1] == Tunnel{5, 6, TunnelClass::centered});
  CHECK(rs[2] == Tunnel{7, 8, TunnelClass::right});
  CHECK(rs[3] == Tunnel{4, 9, TunnelClass::right_across});
  CHECK(rs[4] == Tunnel{3, 10, TunnelClass::right_across});
  CHECK(d.reflected().reflected() == d);
}

TEST_CASE("antichain validation") {
  Interval a{1, 2}, b{2, 4}, c{3, 3};
  CHECK(b.contains(c));
  CHECK_FALSE(a.contains(b));
  CHECK(a.comparable_with(b) == false);
  CHECK(b.comparable_with(c));

  CHECK_NOTHROW(AntichainA(5, {{1, 2}, {2, 4}}));
  CHECK_THROWS_AS(AntichainA(5, {{1, 2}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(AntichainA(3, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(AntichainA(3, {{2, 1}}), std::invalid_argument);
  CHECK_NOTHROW(AntichainB(2, {{1, 2}}));
}

TEST_CASE("noncrossing matching validation") {
  CHECK_NOTHROW(NoncrossingMatching(2, {{1, 4}, {2, 3}}));
  CHECK_THROWS_AS(NoncrossingMatching(2, {{1, 3}, {2, 4}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(NoncrossingMatching(2, {{1, 2}, {1, 3}}),
                  std::invalid_argument);
  NoncrossingMatching m(3, {{1, 2}, {3, 6}, {4, 5}});
  CHECK(m.partner(3) == 6);
  CHECK(m.partner(6) == 3);
  CHECK(m.vertex_count() == 6);

  PartialMatching pm(3, {{1, 2}});
  CHECK(pm.unmatched() == std::vector<int>{3});
}

Tableau straight(std::vector<std::vector<int>> rows) {
  return Tableau(std::move(rows));
}

TEST_CASE("tableau shape rules") {
  Tableau t = straight({{1, 2, 3, 5, 9}, {4, 6, 7, 8, 10}});
  CHECK(t.row_count() == 2);
  CHECK(t.box_count() == 10);
  CHECK(t.is_straight());
  CHECK(t.find(4) == std::pair<int, int>{1, 0});
  CHECK(t.find(9) == std::pair<int, int>{0, 4});

  CHECK_THROWS_AS(straight({{1, 3}, {2, 4, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(straight({{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(straight({{1, 2}, {2, 3}}), std::invalid_argument);

  Tableau skew({1, 0}, {{2, 3}, {1}});
  CHECK_FALSE(skew.is_straight());
  CHECK(skew.box_count() == 3);
  CHECK(skew.find(2) == std::pair<int, int>{0, 1});
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(3) == Rational(3, 1));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("serialization round trips") {
  CHECK(to_text(Permutation({3, 1, 2})) == "3 1 2");
  CHECK(parse_permutation("3 1 2") == Permutation({3, 1, 2}));
  CHECK_THROWS_AS(parse_permutation("1 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);

  CHECK(to_text(DyckWord("UUDD")) == "UUDD");
  CHECK(parse_dyck("UUDD") == DyckWord("UUDD"));
  CHECK_THROWS_AS(parse_dyck("UUXDD"), std::invalid_argument);

  AntichainA a(5, {{1, 2}, {2, 4}});
  CHECK(to_text(a) == "[[1,2],[2,4]]");
  CHECK(parse_antichain_a("[[1,2],[2,4]]", 5) == a);
  CHECK(parse_antichain_a("[]", 3) == AntichainA(3, {}));
  CHECK_THROWS_AS(parse_antichain_a("[[1,5]]", 5), std::invalid_argument);

  NoncrossingMatching m(3, {{1, 2}, {3, 6}, {4, 5}});
  CHECK(to_text(m) == "[[1,2],[3,6],[4,5]]");
  CHECK(parse_matching("[[1,2],[3,6],[4,5]]") == m);
  CHECK_THROWS_AS(parse_matching("[[1,3],[2,4]]"), std::invalid_argument);

  Tableau t = straight({{1, 2, 3, 5}, {4}});
  CHECK(to_text(t) == "[[1,2,3,5],[4]]");
  CHECK(parse_tableau("[[1,2,3,5],[4]]") == t);

  AntichainB b(2, {{1, 2}});
  CHECK(parse_antichain_b(to_text(b), 2) == b);
}

TEST_CASE("enumeration counts are Catalan") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(static_cast<long long>(all_avoiders(n).size()) == catalan(n));
    CHECK(static_cast<long long>(all_dyck(n).size()) == catalan(n));
    CHECK(static_cast<long long>(all_antichains(n).size()) == catalan(n));
    CHECK(static_cast<long long>(all_matchings(n).size()) == catalan(n));
  }
  CHECK(catalan(10) == 16796);
  CHECK(binomial(10, 5) == 252);
  for (int m = 1; m <= 4; ++m)
    CHECK(static_cast<long long>(all_antichains_b(m).size()) ==
          binomial(2 * m, m));
}
