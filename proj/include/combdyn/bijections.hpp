#pragma once

#include "combdyn/antichain.hpp"
#include "combdyn/dyck_word.hpp"
#include "combdyn/matching.hpp"
#include "combdyn/permutation.hpp"

namespace combdyn {

// Bijections between 321-avoiding permutations, Dyck words, root poset
// antichains and noncrossing matchings.  Maps whose domain is S_n(321)
// throw std::domain_error on permutations containing a 321 pattern.

// Peaks of e_p(pi) sit at the weak excedances: (i,j) -> vertex (i+j-1, j-i+1).
DyckWord e_p(const Permutation& p);
Permutation e_p_inv(const DyckWord& d);

// Valleys of e_v(pi) sit at the excedances: (i,j) -> vertex (i+j-1, j-i-1).
DyckWord e_v(const Permutation& p);
Permutation e_v_inv(const DyckWord& d);

// Excedance path drawn below the diagonal, read as a Dyck word.
DyckWord d_v(const Permutation& p);

// Lalanne-Kreweras involution on Dyck words and its avatars.
DyckWord lk(const DyckWord& d);
Permutation lks(const Permutation& p);
AntichainA lka(const AntichainA& a);

// Excedance antichain {[i, pi(i)-1] : pi(i) > i} in A^(n-1).
AntichainA exc_map(const Permutation& p);
Permutation exc_inv(const AntichainA& a);

// Valleys of a Dyck word as an antichain: valley (x,h) -> [(x-h)/2, (x+h)/2].
AntichainA ant_map(const DyckWord& d);
DyckWord ant_inv(const AntichainA& a);

// The Dyck word whose peaks of height >= 2 are exactly
// {(a+b, b-a+2) : [a,b] in A}, padded with height-1 peaks where forced.
DyckWord path_map(const AntichainA& a);
AntichainA path_inv(const DyckWord& d);

// Tunnels of a Dyck word as the arcs of a noncrossing matching.
NoncrossingMatching match_map(const DyckWord& d);
DyckWord match_inv(const NoncrossingMatching& m);

// Symmetric embedding of B^m antichains into A^(2m-1) antichains:
// adjoin [2m-j, 2m-i] for every [i,j].
AntichainA hat(const AntichainB& a);
AntichainB unhat(const AntichainA& a);

}  // namespace combdyn
