#pragma once

#include <utility>

#include "combdyn/dyck_word.hpp"
#include "combdyn/matching.hpp"
#include "combdyn/permutation.hpp"
#include "combdyn/tableau.hpp"

namespace combdyn {

// Robinson-Schensted row insertion: (insertion tableau, recording tableau).
std::pair<Tableau, Tableau> rsk(const Permutation& p);
Permutation rsk_inv(const Tableau& p, const Tableau& q);

// Dyck word of a 321-avoiding permutation read off the two-row RSK pair:
// step i is U iff i lies in the top row of P, step 2n+1-i is D iff i lies in
// the top row of Q.
DyckWord rskd(const Permutation& p);

// Two-row rectangular tableau of a Dyck word: U positions on top.
Tableau tab(const DyckWord& d);
DyckWord tab_inv(const Tableau& t);

// Bender-Knuth toggle: swap entries i and i+1 unless they share a row or a
// column.  Requires a straight shape and 1 <= i < box_count().
Tableau toggle(const Tableau& t, int i);

// Promotion as the toggle chain t_{N-1} ... t_2 t_1.
Tableau promotion_syt(const Tableau& t);
// Evacuation as the chain (t_1)(t_2 t_1)...(t_{N-1} ... t_1).
Tableau evacuation(const Tableau& t);

// Jeu de taquin rectification of a skew standard tableau.
Tableau jdt_rectify(const Tableau& t);
// Evacuation computed the other way: rotate the diagram 180 degrees,
// complement every entry (k -> N+1-k) and rectify.
Tableau evac_via_rotation(const Tableau& t);

// Lattice-word matching of a tableau with at most two rows: entries in the
// top row open, entries in the bottom row close the innermost open arc.
PartialMatching partial_match(const Tableau& t);

}  // namespace combdyn
