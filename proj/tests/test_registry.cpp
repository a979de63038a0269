#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "combdyn/enumerate.hpp"
#include "combdyn/registry.hpp"

using namespace combdyn;

TEST_CASE("registry key sets") {
  std::set<std::string> maps;
  for (const auto& [k, e] : map_registry()) maps.insert(k);
  CHECK(maps == std::set<std::string>{
                    "ant",    "ant-inv",  "ast",           "ast-b",
                    "comp",   "dv",       "ep",            "ep-inv",
                    "ev",     "ev-inv",   "evac",          "evac-rot",
                    "exc",    "exc-inv",  "filter",        "hat",
                    "ideal",  "inverse",  "lk",            "lka",
                    "lks",    "match",    "match-inv",     "max",
                    "min",    "partial-match",             "path",
                    "path-inv",           "pro",           "pro-inv",
                    "pro-syt",            "ra",            "ra-inv",
                    "rc",     "rd",       "rd-inv",        "rectify",
                    "reflect",            "rf",            "ri",
                    "rot",    "rs",       "rs-inv",        "rsk",
                    "rsk-inv",            "rskd",          "tab",
                    "tab-inv",            "unhat"});

  std::set<std::string> dyn;
  for (const auto& [k, e] : dynamics_registry()) dyn.insert(k);
  CHECK(dyn == std::set<std::string>{"evac", "lk", "lka", "lks", "pro",
                                     "pro-inv", "pro-syt", "ra", "ra-inv",
                                     "rd", "rd-inv", "rf", "ri", "rot", "rs",
                                     "rs-inv"});
  // every dynamic is also a map with matching input and output kind
  for (const auto& [k, e] : dynamics_registry()) {
    auto it = map_registry().find(k);
    REQUIRE(it != map_registry().end());
    CHECK(it->second.input == e.kind);
    CHECK(it->second.output == e.kind);
  }
}

TEST_CASE("map entry kinds") {
  const auto& maps = map_registry();
  CHECK(maps.at("ep").input == Kind::perm);
  CHECK(maps.at("ep").output == Kind::dyck);
  CHECK(maps.at("exc").input == Kind::perm);
  CHECK(maps.at("exc").output == Kind::antichain_a);
  CHECK(maps.at("hat").input == Kind::antichain_b);
  CHECK(maps.at("hat").output == Kind::antichain_a);
  CHECK(maps.at("match").input == Kind::dyck);
  CHECK(maps.at("match").output == Kind::matching);
  CHECK(maps.at("rsk").input == Kind::perm);
  CHECK(maps.at("rsk").output == Kind::tableau_pair);
  CHECK(maps.at("ideal").input == Kind::antichain_a);
  CHECK(maps.at("ideal").output == Kind::order_subset);
  CHECK(maps.at("partial-match").input == Kind::tableau);
  CHECK(maps.at("partial-match").output == Kind::partial_matching);

  // applying ep to the identity of S_3 through the registry
  Value v = parse_value(Kind::perm, "1 2 3", std::nullopt, std::nullopt);
  Value d = maps.at("ep").apply(v);
  CHECK(value_to_text(d) == "UDUDUD");
}

TEST_CASE("value utilities") {
  Value p = parse_value(Kind::perm, "2 1 3", std::nullopt, std::nullopt);
  CHECK(kind_of(p) == Kind::perm);
  CHECK(std::string(kind_name(Kind::perm)) == "perm");
  CHECK(std::string(kind_name(Kind::antichain_b)) == "antichain-b");
  CHECK(value_to_text(p) == "2 1 3");
  CHECK(value_to_json(p).is_array());

  Value q = parse_value(Kind::perm, "2 1 3", std::nullopt, std::nullopt);
  CHECK(value_equal(p, q));
  Value r = parse_value(Kind::perm, "1 2 3", std::nullopt, std::nullopt);
  CHECK_FALSE(value_equal(p, r));
  CHECK(value_less(r, p));
  CHECK_FALSE(value_less(p, r));
  // distinct kinds are ordered, never equal
  Value d = parse_value(Kind::dyck, "UD", std::nullopt, std::nullopt);
  CHECK_FALSE(value_equal(p, d));

  // antichains need n, type B needs m
  Value a = parse_value(Kind::antichain_a, "[[1,2]]", 4, std::nullopt);
  CHECK(value_to_text(a) == "[[1,2]]");
  Value b = parse_value(Kind::antichain_b, "[[1,2]]", std::nullopt, 3);
  CHECK(kind_of(b) == Kind::antichain_b);
  CHECK_THROWS_AS(
      parse_value(Kind::antichain_a, "[[1,2]]", std::nullopt, std::nullopt),
      std::invalid_argument);
}

TEST_CASE("domain sweeps") {
  for (int n = 1; n <= 6; ++n) {
    long long perms = 0, dycks = 0, ants = 0, matchings = 0;
    for_each_of_kind(Kind::perm, n, [&](const Value&) { ++perms; });
    for_each_of_kind(Kind::dyck, n, [&](const Value&) { ++dycks; });
    for_each_of_kind(Kind::antichain_a, n, [&](const Value&) { ++ants; });
    for_each_of_kind(Kind::matching, n, [&](const Value&) { ++matchings; });
    CHECK(perms == catalan(n));
    CHECK(dycks == catalan(n));
    CHECK(ants == catalan(n));
    CHECK(matchings == catalan(n));
  }
  for (int m = 1; m <= 4; ++m) {
    long long bs = 0;
    for_each_of_kind(Kind::antichain_b, m, [&](const Value&) { ++bs; });
    CHECK(bs == binomial(2 * m, m));
  }
}

TEST_CASE("registry round trips") {
  // every *-inv key undoes its partner on a small sweep
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"ep", "ep-inv"},   {"ev", "ev-inv"},     {"exc", "exc-inv"},
      {"ant", "ant-inv"}, {"path", "path-inv"}, {"match", "match-inv"},
      {"tab", "tab-inv"}, {"rs", "rs-inv"},     {"ra", "ra-inv"},
      {"rd", "rd-inv"},   {"pro", "pro-inv"}};
  const auto& maps = map_registry();
  for (const auto& [fwd_name, inv_name] : pairs) {
    const MapEntry& fwd = maps.at(fwd_name);
    const MapEntry& inv = maps.at(inv_name);
    CHECK(fwd.input == inv.output);
    CHECK(fwd.output == inv.input);
    for_each_of_kind(fwd.input, 5, [&](const Value& v) {
      CHECK(value_equal(inv.apply(fwd.apply(v)), v));
    });
  }
}