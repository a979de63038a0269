#pragma once

#include <string>

#include "combdyn/antichain.hpp"
#include "combdyn/dyck_word.hpp"
#include "combdyn/matching.hpp"
#include "combdyn/permutation.hpp"
#include "combdyn/tableau.hpp"
#include "json.hpp"

namespace combdyn {

// Canonical text forms.  Permutations are space-separated images, Dyck words
// are the raw U/D string, everything else is compact JSON.

std::string to_text(const Permutation& p);
std::string to_text(const DyckWord& d);
std::string to_text(const AntichainA& a);
std::string to_text(const AntichainB& a);
std::string to_text(const OrderSubset& s);
std::string to_text(const NoncrossingMatching& m);
std::string to_text(const PartialMatching& m);
std::string to_text(const Tableau& t);

nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const DyckWord& d);
nlohmann::json to_json(const AntichainA& a);
nlohmann::json to_json(const AntichainB& a);
nlohmann::json to_json(const OrderSubset& s);
nlohmann::json to_json(const NoncrossingMatching& m);
nlohmann::json to_json(const PartialMatching& m);
// Rows of cells; missing inner cells serialize as null.
nlohmann::json to_json(const Tableau& t);

// Parsers throw std::invalid_argument on malformed input.  Antichains and
// order subsets need the poset size passed separately.
Permutation parse_permutation(const std::string& text);
DyckWord parse_dyck(const std::string& text);
AntichainA parse_antichain_a(const std::string& text, int n);
AntichainB parse_antichain_b(const std::string& text, int m);
OrderSubset parse_order_subset(const std::string& text, int n);
NoncrossingMatching parse_matching(const std::string& text);
Tableau parse_tableau(const std::string& text);

}  // namespace combdyn
