#pragma once

#include <optional>
#include <string>
#include <vector>

#include "combdyn/antichain.hpp"
#include "combdyn/permutation.hpp"
#include "combdyn/rational.hpp"
#include "combdyn/registry.hpp"

namespace combdyn {

long long fixed_points(const Permutation& p);
long long excedance_count(const Permutation& p);
long long weak_excedance_count(const Permutation& p);
// Inversion count; for 321-avoiding permutations the weak excedance identity
// inv = sum (j_k - i_k) is evaluated as well and any disagreement throws.
long long inversions(const Permutation& p);
int sign(const Permutation& p);

// h_i(pi) = [pi^-1(i+1) < i+1] + [pi(i) > i], for 1 <= i <= n-1.
long long h_perm(int i, const Permutation& p);
// l_i(pi) = [pi^-1(i) <= i] + [pi(i) > i], for 1 <= i <= n.
long long l_perm(int i, const Permutation& p);

long long cardinality(const AntichainA& a);
// h_i on antichains: elements ending at i plus elements starting at i,
// with [i,i] counted twice.
long long h_antichain(int i, const AntichainA& a);
// Translations of fp and l_i through Exc and one rowmotion step; exposed for
// verification of the corresponding lemmas.
long long fp_antichain(const AntichainA& a);
long long l_antichain(int i, const AntichainA& a);

struct StatisticEntry {
  Kind kind;
  std::function<long long(const Value&)> eval;
};

// Statistic lookup by name and object kind.  Permutations: fp, exc, wexc,
// inv, sgn, h<i>, l<i>.  Antichains: card, h<i>.
std::optional<StatisticEntry> find_statistic(const std::string& name,
                                             Kind kind);

struct OrbitReport {
  std::string representative;
  int size = 0;
  long long sum = 0;
  Rational average;
};

struct HomomesyReport {
  std::string statistic;
  std::string dynamic;
  int n = 0;
  int orbit_count = 0;
  std::vector<OrbitReport> orbits;
  bool homomesic = false;
  std::optional<Rational> c;
};

// Exact orbit averages of a named statistic under a named dynamic over the
// full domain of size n.  Throws std::invalid_argument when the statistic
// and the dynamic live on different kinds or are unknown.
HomomesyReport homomesy_report(const std::string& statistic,
                               const std::string& dynamic, int n);
nlohmann::json to_json(const HomomesyReport& r);
std::string to_text(const HomomesyReport& r);

// Antichains of A^(n-1) fixed by lka after one rowmotion step; equals
// binomial(n, floor(n/2)).
long long count_fixed_lka_ra(int n);
// Type B count over hatted antichains; equals 2^m.
long long count_fixed_lka_ra_b(int m);
// Independent oracles for the two counts.
long long count_avoiding_involutions(int n);
long long count_123_involutions_rc_fixed(int n);

}  // namespace combdyn
