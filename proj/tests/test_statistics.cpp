#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "combdyn/bijections.hpp"
#include "combdyn/dynamics.hpp"
#include "combdyn/enumerate.hpp"
#include "combdyn/statistics.hpp"

using namespace combdyn;

TEST_CASE("permutation statistics") {
  Permutation p({2, 4, 1, 3, 5, 8, 9, 6, 7});
  CHECK(fixed_points(p) == 1);
  CHECK(excedance_count(p) == 4);
  CHECK(weak_excedance_count(p) == 5);
  CHECK(inversions(p) == 7);
  CHECK(sign(p) == -1);
  CHECK(sign(Permutation::identity(5)) == 1);

  // two orbit rows of the n=4 table
  Permutation a({1, 4, 2, 3});
  CHECK(fixed_points(a) == 1);
  CHECK(h_perm(2, a) == 1);
  CHECK(l_perm(2, a) == 1);
  CHECK(inversions(a) == 2);
  Permutation b({3, 1, 4, 2});
  CHECK(fixed_points(b) == 0);
  CHECK(h_perm(2, b) == 1);
  CHECK(l_perm(2, b) == 0);
  CHECK(inversions(b) == 3);
}

TEST_CASE("fixed point identities") {
  for (int n = 1; n <= 6; ++n)
    for (const Permutation& p : all_avoiders(n)) {
      long long fp = fixed_points(p);
      long long lsum = 0, hsum = 0;
      for (int i = 1; i <= n; ++i) lsum += l_perm(i, p);
      for (int i = 1; i < n; ++i) hsum += h_perm(i, p);
      CHECK(fp == lsum - hsum);
      CHECK(fp == weak_excedance_count(p) - excedance_count(p));
      CHECK(fp == n - excedance_count(p) - excedance_count(p.inverse()));
      CHECK(l_perm(1, p) == 1);
      CHECK(l_perm(n, p) == 1);
    }
}

TEST_CASE("antichain statistics") {
  AntichainA a(9, {{1, 1}, {2, 3}, {6, 7}, {7, 8}});
  CHECK(cardinality(a) == 4);
  CHECK(h_antichain(1, a) == 2);  // [1,1] starts and ends there
  CHECK(h_antichain(2, a) == 1);
  CHECK(h_antichain(3, a) == 1);
  CHECK(h_antichain(7, a) == 2);
  CHECK(h_antichain(4, a) == 0);

  // l_5 of {[4,4],[5,5]} in A^8: [4,4] contributes through the i-1 root only
  CHECK(l_antichain(5, AntichainA(9, {{4, 4}, {5, 5}})) == 1);

  // defining properties of the translated statistics
  for (int n = 2; n <= 6; ++n)
    for (const Permutation& p : all_avoiders(n)) {
      AntichainA img = exc_map(rowmotion_s(p));
      CHECK(fp_antichain(img) == fixed_points(p));
      for (int i = 1; i <= n; ++i) CHECK(l_antichain(i, img) == l_perm(i, p));
    }
}

TEST_CASE("homomesy reports") {
  HomomesyReport fp = homomesy_report("fp", "rs", 4);
  CHECK(fp.homomesic);
  CHECK(fp.c == Rational(1));
  CHECK(fp.orbit_count == 3);
  std::vector<int> sizes;
  for (const OrbitReport& o : fp.orbits) sizes.push_back(o.size);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{2, 4, 8});
  for (const OrbitReport& o : fp.orbits) CHECK(o.average == Rational(1));

  CHECK_FALSE(homomesy_report("inv", "rs", 4).homomesic);
  CHECK_FALSE(homomesy_report("inv", "rs", 4).c.has_value());

  HomomesyReport card = homomesy_report("card", "ra", 4);
  CHECK(card.homomesic);
  CHECK(card.c == Rational(3, 2));

  CHECK(homomesy_report("h2", "rs", 5).c == Rational(1));
  CHECK(homomesy_report("l3", "rs", 5).c == Rational(1));
  CHECK(homomesy_report("sgn", "rs", 4).c == Rational(0));
  CHECK(homomesy_report("sgn", "rs", 6).c == Rational(0));

  CHECK_THROWS_AS(homomesy_report("bogus", "rs", 4), std::invalid_argument);
  CHECK_THROWS_AS(homomesy_report("fp", "bogus", 4), std::invalid_argument);
  // statistic and dynamic live on different kinds
  CHECK_THROWS_AS(homomesy_report("card", "rs", 4), std::invalid_argument);
  CHECK_THROWS_AS(homomesy_report("fp", "ra", 4), std::invalid_argument);
}

TEST_CASE("statistic lookup") {
  CHECK(find_statistic("fp", Kind::perm).has_value());
  CHECK(find_statistic("h3", Kind::perm).has_value());
  CHECK(find_statistic("l1", Kind::perm).has_value());
  CHECK(find_statistic("card", Kind::antichain_a).has_value());
  CHECK(find_statistic("h2", Kind::antichain_a).has_value());
  CHECK_FALSE(find_statistic("fp", Kind::antichain_a).has_value());
  CHECK_FALSE(find_statistic("card", Kind::perm).has_value());
  CHECK_FALSE(find_statistic("bogus", Kind::perm).has_value());
  CHECK_FALSE(find_statistic("fp", Kind::dyck).has_value());

  auto fp = find_statistic("fp", Kind::perm);
  CHECK(fp->eval(Value(Permutation({2, 1, 3}))) == 1);
}

TEST_CASE("fixed point counts of the involution") {
  for (int n = 2; n <= 8; ++n)
    CHECK(count_fixed_lka_ra(n) == binomial(n, n / 2));
  CHECK(count_fixed_lka_ra(4) == 6);
  for (int n = 1; n <= 8; ++n)
    CHECK(count_avoiding_involutions(n) == binomial(n, n / 2));
  for (int m = 1; m <= 4; ++m) {
    CHECK(count_fixed_lka_ra_b(m) == (1LL << m));
    CHECK(count_123_involutions_rc_fixed(2 * m) == (1LL << m));
  }
  CHECK(count_fixed_lka_ra_b(3) == 8);
}