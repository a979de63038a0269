#include "combdyn/registry.hpp"

#include <stdexcept>

#include "combdyn/bijections.hpp"
#include "combdyn/dynamics.hpp"
#include "combdyn/enumerate.hpp"
#include "combdyn/tableaux.hpp"

namespace combdyn {

static_assert(static_cast<int>(Kind::tableau_pair) == 8,
              "Kind enumerators must mirror the Value alternatives");

Kind kind_of(const Value& v) { return static_cast<Kind>(v.index()); }

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::perm: return "perm";
    case Kind::dyck: return "dyck";
    case Kind::antichain_a: return "antichain-a";
    case Kind::antichain_b: return "antichain-b";
    case Kind::order_subset: return "order-subset";
    case Kind::matching: return "matching";
    case Kind::partial_matching: return "partial-matching";
    case Kind::tableau: return "tableau";
    case Kind::tableau_pair: return "tableau-pair";
  }
  return "unknown";
}

namespace {

struct TextVisitor {
  std::string operator()(const TableauPair& pq) const {
    return nlohmann::json{to_json(pq.first), to_json(pq.second)}.dump();
  }
  template <class T>
  std::string operator()(const T& x) const {
    return to_text(x);
  }
};

struct JsonVisitor {
  nlohmann::json operator()(const TableauPair& pq) const {
    return nlohmann::json{to_json(pq.first), to_json(pq.second)};
  }
  template <class T>
  nlohmann::json operator()(const T& x) const {
    return to_json(x);
  }
};

}  // namespace

std::string value_to_text(const Value& v) {
  return std::visit(TextVisitor{}, v);
}

nlohmann::json value_to_json(const Value& v) {
  return std::visit(JsonVisitor{}, v);
}

Value parse_value(Kind kind, const std::string& input, std::optional<int> n,
                  std::optional<int> m) {
  switch (kind) {
    case Kind::perm:
      return parse_permutation(input);
    case Kind::dyck:
      return parse_dyck(input);
    case Kind::antichain_a:
      if (!n) throw std::invalid_argument("antichain input needs --n");
      return parse_antichain_a(input, *n);
    case Kind::antichain_b:
      if (!m) throw std::invalid_argument("type B antichain input needs --m");
      return parse_antichain_b(input, *m);
    case Kind::order_subset:
      if (!n) throw std::invalid_argument("order subset input needs --n");
      return parse_order_subset(input, *n);
    case Kind::matching:
      return parse_matching(input);
    case Kind::tableau:
      return parse_tableau(input);
    case Kind::tableau_pair: {
      auto j = nlohmann::json::parse(input, nullptr, false);
      if (j.is_discarded() || !j.is_array() || j.size() != 2)
        throw std::invalid_argument("tableau pair: expected a [P, Q] array");
      return TableauPair{parse_tableau(j[0].dump()),
                         parse_tableau(j[1].dump())};
    }
    case Kind::partial_matching:
      throw std::invalid_argument("partial matchings are output only");
  }
  throw std::invalid_argument("unknown kind");
}

bool value_equal(const Value& x, const Value& y) { return x == y; }

bool value_less(const Value& x, const Value& y) { return x < y; }

namespace {

template <class In, class Out>
MapEntry entry(Kind in, Kind out, Out (*f)(const In&), const char* summary) {
  return MapEntry{
      in, out, [f](const Value& v) -> Value { return f(std::get<In>(v)); },
      summary};
}

std::map<std::string, MapEntry> build_maps() {
  std::map<std::string, MapEntry> maps;
  const Kind P = Kind::perm, D = Kind::dyck, A = Kind::antichain_a,
             B = Kind::antichain_b, S = Kind::order_subset, M = Kind::matching;

  maps["ep"] = entry(P, D, &e_p, "peaks-at-weak-excedances Dyck path");
  maps["ep-inv"] = entry(D, P, &e_p_inv, "inverse of ep");
  maps["ev"] = entry(P, D, &e_v, "valleys-at-excedances Dyck path");
  maps["ev-inv"] = entry(D, P, &e_v_inv, "inverse of ev");
  maps["dv"] = entry(P, D, &d_v, "excedance path below the diagonal");
  maps["lk"] = entry(D, D, &lk, "Lalanne-Kreweras involution");
  maps["lks"] = entry(P, P, &lks, "LK transported to permutations");
  maps["lka"] = entry(A, A, &lka, "LK transported to antichains");
  maps["exc"] = entry(P, A, &exc_map, "excedance antichain");
  maps["exc-inv"] = entry(A, P, &exc_inv, "inverse of exc");
  maps["ant"] = entry(D, A, &ant_map, "valleys as an antichain");
  maps["ant-inv"] = entry(A, D, &ant_inv, "inverse of ant");
  maps["path"] = entry(A, D, &path_map, "prescribed-peaks Dyck path");
  maps["path-inv"] = entry(D, A, &path_inv, "inverse of path");
  maps["match"] = entry(D, M, &match_map, "tunnels as a matching");
  maps["match-inv"] = entry(M, D, &match_inv, "inverse of match");
  maps["hat"] = entry(B, A, &hat, "symmetric embedding into type A");
  maps["unhat"] = entry(A, B, &unhat, "inverse of hat");
  maps["ast"] = entry(A, M, &ast, "Armstrong-Stump-Thomas matching");
  maps["ast-b"] = entry(B, M, &ast_b, "type B AST matching");

  maps["rsk"] = MapEntry{P, Kind::tableau_pair,
                         [](const Value& v) -> Value {
                           return rsk(std::get<Permutation>(v));
                         },
                         "RSK insertion and recording tableaux"};
  maps["rsk-inv"] = MapEntry{Kind::tableau_pair, P,
                             [](const Value& v) -> Value {
                               const auto& pq = std::get<TableauPair>(v);
                               return rsk_inv(pq.first, pq.second);
                             },
                             "inverse RSK"};
  maps["rskd"] = entry(P, D, &rskd, "Dyck path of the RSK top rows");
  maps["tab"] = entry(D, Kind::tableau, &tab, "two-row tableau of a path");
  maps["tab-inv"] = entry(Kind::tableau, D, &tab_inv, "inverse of tab");
  maps["pro-syt"] =
      entry(Kind::tableau, Kind::tableau, &promotion_syt, "tableau promotion");
  maps["evac"] =
      entry(Kind::tableau, Kind::tableau, &evacuation, "evacuation by toggles");
  maps["evac-rot"] = entry(Kind::tableau, Kind::tableau, &evac_via_rotation,
                           "evacuation by rotate-and-rectify");
  maps["rectify"] =
      entry(Kind::tableau, Kind::tableau, &jdt_rectify, "jdt rectification");
  maps["partial-match"] = entry(Kind::tableau, Kind::partial_matching,
                                &partial_match, "lattice-word partial matching");

  maps["ideal"] = entry(A, S, &ideal_generated, "generated order ideal");
  maps["filter"] = entry(A, S, &filter_generated, "generated order filter");
  maps["max"] = entry(S, A, &maximal_elements, "maximal elements");
  maps["min"] = entry(S, A, &minimal_elements, "minimal elements");
  maps["comp"] = entry(S, S, &complement, "complement subset");

  maps["ra"] = entry(A, A, &rowmotion_a, "antichain rowmotion");
  maps["ra-inv"] = entry(A, A, &rowmotion_a_inv, "inverse antichain rowmotion");
  maps["rs"] = entry(P, P, &rowmotion_s, "permutation rowmotion");
  maps["rs-inv"] =
      entry(P, P, &rowmotion_s_inv, "inverse permutation rowmotion");
  maps["rd"] = entry(D, D, &rowmotion_d, "Dyck path rowmotion");
  maps["rd-inv"] = entry(D, D, &rowmotion_d_inv, "inverse Dyck path rowmotion");
  maps["ri"] = entry(S, S, &rowmotion_i, "ideal rowmotion");
  maps["rf"] = entry(S, S, &rowmotion_f, "filter rowmotion");
  maps["pro"] = entry(D, D, &promotion_dyck, "first-return promotion");
  maps["pro-inv"] = entry(D, D, &promotion_dyck_inv, "inverse promotion");
  maps["rot"] = entry(M, M, &rotate, "matching rotation");

  maps["inverse"] = MapEntry{P, P,
                             [](const Value& v) -> Value {
                               return std::get<Permutation>(v).inverse();
                             },
                             "inverse permutation"};
  maps["rc"] = MapEntry{P, P,
                        [](const Value& v) -> Value {
                          return std::get<Permutation>(v).reverse_complement();
                        },
                        "reverse complement"};
  maps["reflect"] = MapEntry{D, D,
                             [](const Value& v) -> Value {
                               return std::get<DyckWord>(v).reflected();
                             },
                             "reverse the word, swapping U and D"};
  return maps;
}

template <class T>
DynamicEntry dynamic(Kind kind, T (*f)(const T&), const char* summary) {
  return DynamicEntry{
      kind, [f](const Value& v) -> Value { return f(std::get<T>(v)); },
      summary};
}

std::map<std::string, DynamicEntry> build_dynamics() {
  std::map<std::string, DynamicEntry> dyns;
  dyns["rs"] = dynamic(Kind::perm, &rowmotion_s, "rowmotion on S_n(321)");
  dyns["rs-inv"] = dynamic(Kind::perm, &rowmotion_s_inv, "inverse rowmotion");
  dyns["ra"] = dynamic(Kind::antichain_a, &rowmotion_a,
                       "rowmotion on antichains of A^(n-1)");
  dyns["ra-inv"] =
      dynamic(Kind::antichain_a, &rowmotion_a_inv, "inverse rowmotion");
  dyns["rd"] = dynamic(Kind::dyck, &rowmotion_d, "rowmotion on Dyck paths");
  dyns["rd-inv"] = dynamic(Kind::dyck, &rowmotion_d_inv, "inverse rowmotion");
  dyns["ri"] = dynamic(Kind::order_subset, &rowmotion_i,
                       "rowmotion on order ideals");
  dyns["rf"] = dynamic(Kind::order_subset, &rowmotion_f,
                       "rowmotion on order filters");
  dyns["pro"] = dynamic(Kind::dyck, &promotion_dyck, "Dyck path promotion");
  dyns["pro-inv"] =
      dynamic(Kind::dyck, &promotion_dyck_inv, "inverse promotion");
  dyns["pro-syt"] =
      dynamic(Kind::tableau, &promotion_syt, "tableau promotion");
  dyns["evac"] = dynamic(Kind::tableau, &evacuation, "evacuation involution");
  dyns["rot"] = dynamic(Kind::matching, &rotate, "matching rotation");
  dyns["lk"] = dynamic(Kind::dyck, &lk, "Lalanne-Kreweras involution");
  dyns["lka"] = dynamic(Kind::antichain_a, &lka, "LK on antichains");
  dyns["lks"] = dynamic(Kind::perm, &lks, "LK on permutations");
  return dyns;
}

}  // namespace

const std::map<std::string, MapEntry>& map_registry() {
  static const std::map<std::string, MapEntry> maps = build_maps();
  return maps;
}

const std::map<std::string, DynamicEntry>& dynamics_registry() {
  static const std::map<std::string, DynamicEntry> dyns = build_dynamics();
  return dyns;
}

void for_each_of_kind(Kind kind, int n,
                      const std::function<void(const Value&)>& visit) {
  switch (kind) {
    case Kind::perm:
      for_each_avoider(n, [&](const Permutation& p) { visit(p); });
      return;
    case Kind::dyck:
      for_each_dyck(n, [&](const DyckWord& d) { visit(d); });
      return;
    case Kind::antichain_a:
      for_each_antichain(n, [&](const AntichainA& a) { visit(a); });
      return;
    case Kind::antichain_b:
      for_each_antichain_b(n, [&](const AntichainB& b) { visit(b); });
      return;
    case Kind::matching:
      for_each_matching(n, [&](const NoncrossingMatching& m) { visit(m); });
      return;
    default:
      throw std::invalid_argument(
          std::string("no exhaustive enumeration for kind ") +
          kind_name(kind));
  }
}

}  // namespace combdyn
