#pragma once

#include <functional>
#include <vector>

#include "combdyn/antichain.hpp"
#include "combdyn/dyck_word.hpp"
#include "combdyn/matching.hpp"
#include "combdyn/permutation.hpp"
#include "combdyn/tableau.hpp"

namespace combdyn {

// Exhaustive generators, each visiting its family exactly once in a fixed
// lexicographic order.  Sizes must be positive.

void for_each_avoider(int n, const std::function<void(const Permutation&)>& visit);
void for_each_dyck(int n, const std::function<void(const DyckWord&)>& visit);
void for_each_antichain(int n, const std::function<void(const AntichainA&)>& visit);
void for_each_antichain_b(int m, const std::function<void(const AntichainB&)>& visit);
void for_each_matching(int n, const std::function<void(const NoncrossingMatching&)>& visit);
// Standard tableaux with at most two rows and the given number of boxes.
void for_each_two_row_tableau(int boxes, const std::function<void(const Tableau&)>& visit);

std::vector<Permutation> all_avoiders(int n);
std::vector<DyckWord> all_dyck(int n);
std::vector<AntichainA> all_antichains(int n);
std::vector<AntichainB> all_antichains_b(int m);
std::vector<NoncrossingMatching> all_matchings(int n);
std::vector<Tableau> all_two_row_tableaux(int boxes);

long long binomial(int n, int k);
long long catalan(int n);

}  // namespace combdyn
