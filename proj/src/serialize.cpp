#include "combdyn/serialize.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace combdyn {

namespace {

using nlohmann::json;

json intervals_to_json(const std::vector<Interval>& elements) {
  json out = json::array();
  for (const Interval& e : elements) out.push_back({e.a, e.b});
  return out;
}

std::vector<Interval> intervals_from_json(const json& j, const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + ": expected a JSON array");
  std::vector<Interval> out;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument(std::string(what) +
                                  ": expected [a,b] integer pairs");
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw std::invalid_argument(std::string(what) + ": malformed JSON");
  return j;
}

}  // namespace

std::string to_text(const Permutation& p) {
  std::ostringstream out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out << ' ';
    out << p(i);
  }
  return out.str();
}

std::string to_text(const DyckWord& d) { return d.word(); }
std::string to_text(const AntichainA& a) { return to_json(a).dump(); }
std::string to_text(const AntichainB& a) { return to_json(a).dump(); }
std::string to_text(const OrderSubset& s) { return to_json(s).dump(); }
std::string to_text(const NoncrossingMatching& m) { return to_json(m).dump(); }
std::string to_text(const PartialMatching& m) { return to_json(m).dump(); }
std::string to_text(const Tableau& t) { return to_json(t).dump(); }

json to_json(const Permutation& p) { return json(p.images()); }
json to_json(const DyckWord& d) { return json(d.word()); }
json to_json(const AntichainA& a) { return intervals_to_json(a.elements()); }
json to_json(const AntichainB& a) { return intervals_to_json(a.elements()); }

json to_json(const OrderSubset& s) {
  return json{{"kind", s.kind() == SubsetKind::ideal ? "ideal" : "filter"},
              {"members", intervals_to_json(s.members())}};
}

json to_json(const NoncrossingMatching& m) {
  json out = json::array();
  for (auto [x, y] : m.arcs()) out.push_back({x, y});
  return out;
}

json to_json(const PartialMatching& m) {
  json arcs = json::array();
  for (auto [x, y] : m.arcs()) arcs.push_back({x, y});
  return json{{"vertices", m.vertex_count()},
              {"arcs", arcs},
              {"unmatched", m.unmatched()}};
}

json to_json(const Tableau& t) {
  json out = json::array();
  for (int r = 0; r < t.row_count(); ++r) {
    json row = json::array();
    for (int z = 0; z < t.inner()[r]; ++z) row.push_back(nullptr);
    for (int v : t.rows()[r]) row.push_back(v);
    out.push_back(row);
  }
  return out;
}

Permutation parse_permutation(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> images;
  int v = 0;
  while (in >> v) images.push_back(v);
  if (!in.eof())
    throw std::invalid_argument("permutation: expected space-separated integers");
  if (images.empty())
    throw std::invalid_argument("permutation: empty input");
  return Permutation(std::move(images));
}

DyckWord parse_dyck(const std::string& text) {
  std::string w;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) w.push_back(c);
  return DyckWord(std::move(w));
}

AntichainA parse_antichain_a(const std::string& text, int n) {
  return AntichainA(n, intervals_from_json(parse_json(text, "antichain A"),
                                           "antichain A"));
}

AntichainB parse_antichain_b(const std::string& text, int m) {
  return AntichainB(m, intervals_from_json(parse_json(text, "antichain B"),
                                           "antichain B"));
}

OrderSubset parse_order_subset(const std::string& text, int n) {
  json j = parse_json(text, "order subset");
  if (!j.is_object() || !j.contains("kind") || !j.contains("members"))
    throw std::invalid_argument("order subset: expected {kind, members}");
  const std::string kind = j["kind"].get<std::string>();
  if (kind != "ideal" && kind != "filter")
    throw std::invalid_argument("order subset: kind must be ideal or filter");
  return OrderSubset(n, kind == "ideal" ? SubsetKind::ideal : SubsetKind::filter,
                     intervals_from_json(j["members"], "order subset"));
}

NoncrossingMatching parse_matching(const std::string& text) {
  json j = parse_json(text, "matching");
  if (!j.is_array())
    throw std::invalid_argument("matching: expected a JSON array");
  std::vector<std::pair<int, int>> arcs;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("matching: expected [x,y] integer pairs");
    arcs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  if (arcs.empty()) throw std::invalid_argument("matching: empty input");
  const int n = static_cast<int>(arcs.size());
  return NoncrossingMatching(n, std::move(arcs));
}

Tableau parse_tableau(const std::string& text) {
  json j = parse_json(text, "tableau");
  if (!j.is_array()) throw std::invalid_argument("tableau: expected rows");
  std::vector<int> inner;
  std::vector<std::vector<int>> rows;
  for (const json& row : j) {
    if (!row.is_array()) throw std::invalid_argument("tableau: expected rows");
    int nulls = 0;
    std::vector<int> cells;
    for (const json& cell : row) {
      if (cell.is_null()) {
        if (!cells.empty())
          throw std::invalid_argument("tableau: null cells must be leading");
        ++nulls;
      } else if (cell.is_number_integer()) {
        cells.push_back(cell.get<int>());
      } else {
        throw std::invalid_argument("tableau: cells must be integers or null");
      }
    }
    inner.push_back(nulls);
    rows.push_back(std::move(cells));
  }
  return Tableau(std::move(inner), std::move(rows));
}

}  // namespace combdyn
