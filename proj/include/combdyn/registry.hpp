#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "combdyn/antichain.hpp"
#include "combdyn/dyck_word.hpp"
#include "combdyn/matching.hpp"
#include "combdyn/permutation.hpp"
#include "combdyn/serialize.hpp"
#include "combdyn/tableau.hpp"

namespace combdyn {

enum class Kind {
  perm,
  dyck,
  antichain_a,
  antichain_b,
  order_subset,
  matching,
  partial_matching,
  tableau,
  tableau_pair,
};

using TableauPair = std::pair<Tableau, Tableau>;

using Value = std::variant<Permutation, DyckWord, AntichainA, AntichainB,
                           OrderSubset, NoncrossingMatching, PartialMatching,
                           Tableau, TableauPair>;

Kind kind_of(const Value& v);
const char* kind_name(Kind k);
std::string value_to_text(const Value& v);
nlohmann::json value_to_json(const Value& v);
// n is consumed by kinds that cannot infer their size (antichains, order
// subsets take n; type B antichains take m).
Value parse_value(Kind kind, const std::string& input, std::optional<int> n,
                  std::optional<int> m);
bool value_equal(const Value& x, const Value& y);
bool value_less(const Value& x, const Value& y);

struct MapEntry {
  Kind input;
  Kind output;
  std::function<Value(const Value&)> apply;
  const char* summary;
};

struct DynamicEntry {
  Kind kind;
  std::function<Value(const Value&)> step;
  const char* summary;
};

// Named single-step maps (all bijections plus the tableau operators).
const std::map<std::string, MapEntry>& map_registry();
// Named invertible dynamics usable with orbits and homomesy scans.
const std::map<std::string, DynamicEntry>& dynamics_registry();

// Exhaustive domain sweep for one kind at size n (perm -> S_n(321),
// antichain_a -> A(A^(n-1)), dyck -> D_n, matching -> NC_n).
void for_each_of_kind(Kind kind, int n,
                      const std::function<void(const Value&)>& visit);

}  // namespace combdyn
