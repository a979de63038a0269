#pragma once

#include <utility>
#include <vector>

#include "combdyn/antichain.hpp"
#include "combdyn/dyck_word.hpp"
#include "combdyn/matching.hpp"
#include "combdyn/orbit.hpp"
#include "combdyn/permutation.hpp"
#include "combdyn/tableau.hpp"

namespace combdyn {

// Transfer maps between antichains, ideals and filters of A^(n-1).
OrderSubset ideal_generated(const AntichainA& a);     // down-closure
OrderSubset filter_generated(const AntichainA& a);    // up-closure
AntichainA maximal_elements(const OrderSubset& s);
AntichainA minimal_elements(const OrderSubset& s);
OrderSubset complement(const OrderSubset& s);         // ideal <-> filter

// Rowmotion on antichains: minimal elements of the complement of the
// generated ideal.  Computed through the Dyck word avatar; assertion builds
// additionally evaluate the transfer-map composition and compare.
AntichainA rowmotion_a(const AntichainA& a);
AntichainA rowmotion_a_inv(const AntichainA& a);
AntichainA rowmotion_a_via_transfer(const AntichainA& a);
AntichainA rowmotion_a_inv_via_transfer(const AntichainA& a);

// Rowmotion on ideals and on filters.
OrderSubset rowmotion_i(const OrderSubset& ideal);
OrderSubset rowmotion_f(const OrderSubset& filter);

// Rowmotion on Dyck words: valleys in, prescribed peaks out.
DyckWord rowmotion_d(const DyckWord& d);
DyckWord rowmotion_d_inv(const DyckWord& d);

// Rowmotion on 321-avoiding permutations via the two path bijections;
// assertion builds compare with the excedance-antichain conjugate.
Permutation rowmotion_s(const Permutation& p);
Permutation rowmotion_s_inv(const Permutation& p);
Permutation rowmotion_s_via_antichains(const Permutation& p);

// First-return promotion on Dyck words: U A D B -> A U B D.
DyckWord promotion_dyck(const DyckWord& d);
DyckWord promotion_dyck_inv(const DyckWord& d);

// Rotation of a matching: every arc (i,j) -> (i+1, j+1) mod 2n.
NoncrossingMatching rotate(const NoncrossingMatching& m);
bool is_centrally_symmetric(const NoncrossingMatching& m);

// Antichain-to-matching map on the circle with vertices 1..n, then
// n-bar..1-bar, where i-bar = 2n+1-i.  For i = 1..n: if [i, j-1] lies in the
// antichain, vertex j is matched to the nearest unmatched vertex
// counterclockwise (descending labels); otherwise i-bar is matched to the
// nearest unmatched vertex clockwise (ascending labels).
NoncrossingMatching ast(const AntichainA& a);
// Arcs of ast in construction order.
std::vector<std::pair<int, int>> ast_steps(const AntichainA& a);
// Type B variant through the symmetric embedding.
NoncrossingMatching ast_b(const AntichainB& a);

// Bottom of arc (x,y): y when x+y <= 2n+1, else x.  A matching is determined
// by its bottom set.
std::vector<int> bottoms(const NoncrossingMatching& m);
NoncrossingMatching matching_from_bottoms(const std::vector<int>& bottom_set,
                                          int n);

}  // namespace combdyn
