#include "combdyn/statistics.hpp"

#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "combdyn/bijections.hpp"
#include "combdyn/dynamics.hpp"
#include "combdyn/enumerate.hpp"

namespace combdyn {

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& o) {
  *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  const __int128 lhs = static_cast<__int128>(num_) * o.den_;
  const __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

long long fixed_points(const Permutation& p) {
  long long c = 0;
  for (int i = 1; i <= p.size(); ++i) c += p(i) == i;
  return c;
}

long long excedance_count(const Permutation& p) {
  long long c = 0;
  for (int i = 1; i <= p.size(); ++i) c += p(i) > i;
  return c;
}

long long weak_excedance_count(const Permutation& p) {
  long long c = 0;
  for (int i = 1; i <= p.size(); ++i) c += p(i) >= i;
  return c;
}

long long inversions(const Permutation& p) {
  const int n = p.size();
  long long direct = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) direct += p(i) > p(j);
  if (p.is_321_avoiding()) {
    long long by_wexc = 0;
    for (auto [i, j] : weak_excedances(p)) by_wexc += j - i;
    if (by_wexc != direct)
      throw std::logic_error("inversions: weak excedance identity violated");
  }
  return direct;
}

int sign(const Permutation& p) { return inversions(p) % 2 == 0 ? 1 : -1; }

long long h_perm(int i, const Permutation& p) {
  if (i < 1 || i >= p.size())
    throw std::domain_error("h_i: index out of range");
  const Permutation q = p.inverse();
  return (q(i + 1) < i + 1 ? 1 : 0) + (p(i) > i ? 1 : 0);
}

long long l_perm(int i, const Permutation& p) {
  if (i < 1 || i > p.size())
    throw std::domain_error("l_i: index out of range");
  const Permutation q = p.inverse();
  return (q(i) <= i ? 1 : 0) + (p(i) > i ? 1 : 0);
}

long long cardinality(const AntichainA& a) { return a.size(); }

long long h_antichain(int i, const AntichainA& a) {
  if (i < 1 || i >= a.n())
    throw std::domain_error("h_i: index out of range");
  long long c = 0;
  for (int j = 1; j <= i; ++j) c += a.contains({j, i});
  for (int j = i; j <= a.n() - 1; ++j) c += a.contains({i, j});
  return c;
}

long long fp_antichain(const AntichainA& a) {
  const int n = a.n();
  if (n == 1) return 1;
  auto root = [&](int k) { return a.contains({k, k}); };
  long long c = (root(1) ? 1 : 0) + (root(n - 1) ? 1 : 0);
  for (int k = 1; k <= n - 2; ++k) c += root(k) && root(k + 1);
  return c;
}

long long l_antichain(int i, const AntichainA& a) {
  const int n = a.n();
  if (i < 1 || i > n) throw std::domain_error("l_i: index out of range");
  if (i == 1 || i == n) return 1;
  long long c = 0;
  for (int j = 1; j <= i - 1; ++j) c += a.contains({j, i});
  for (int j = i; j <= n - 1; ++j) c += a.contains({i - 1, j});
  c += a.contains({i - 1, i - 1}) || a.contains({i, i});
  return c;
}

namespace {

// Accepts h7, l12 and similar single-letter indexed statistic names.
std::optional<int> indexed_name(const std::string& name, char prefix) {
  if (name.size() < 2 || name[0] != prefix) return std::nullopt;
  int v = 0;
  for (std::size_t k = 1; k < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
    if (v > 1000) return std::nullopt;
    v = v * 10 + (name[k] - '0');
  }
  return v;
}

StatisticEntry perm_entry(long long (*f)(const Permutation&)) {
  return {Kind::perm,
          [f](const Value& v) { return f(std::get<Permutation>(v)); }};
}

}  // namespace

std::optional<StatisticEntry> find_statistic(const std::string& name,
                                             Kind kind) {
  if (kind == Kind::perm) {
    if (name == "fp") return perm_entry(&fixed_points);
    if (name == "exc") return perm_entry(&excedance_count);
    if (name == "wexc") return perm_entry(&weak_excedance_count);
    if (name == "inv") return perm_entry(&inversions);
    if (name == "sgn")
      return StatisticEntry{Kind::perm, [](const Value& v) {
                              return static_cast<long long>(
                                  sign(std::get<Permutation>(v)));
                            }};
    if (auto i = indexed_name(name, 'h'))
      return StatisticEntry{Kind::perm, [i = *i](const Value& v) {
                              return h_perm(i, std::get<Permutation>(v));
                            }};
    if (auto i = indexed_name(name, 'l'))
      return StatisticEntry{Kind::perm, [i = *i](const Value& v) {
                              return l_perm(i, std::get<Permutation>(v));
                            }};
  }
  if (kind == Kind::antichain_a) {
    if (name == "card")
      return StatisticEntry{Kind::antichain_a, [](const Value& v) {
                              return cardinality(std::get<AntichainA>(v));
                            }};
    if (auto i = indexed_name(name, 'h'))
      return StatisticEntry{Kind::antichain_a, [i = *i](const Value& v) {
                              return h_antichain(i, std::get<AntichainA>(v));
                            }};
  }
  return std::nullopt;
}

HomomesyReport homomesy_report(const std::string& statistic,
                               const std::string& dynamic, int n) {
  const auto& dyns = dynamics_registry();
  const auto dit = dyns.find(dynamic);
  if (dit == dyns.end())
    throw std::invalid_argument("unknown dynamic: " + dynamic);
  const DynamicEntry& dyn = dit->second;
  const auto stat = find_statistic(statistic, dyn.kind);
  if (!stat)
    throw std::invalid_argument("statistic " + statistic +
                                " is not defined on kind " +
                                kind_name(dyn.kind));

  HomomesyReport report;
  report.statistic = statistic;
  report.dynamic = dynamic;
  report.n = n;

  std::set<std::string> visited;
  for_each_of_kind(dyn.kind, n, [&](const Value& start) {
    if (visited.count(value_to_text(start))) return;
    std::vector<Value> orbit{start};
    for (Value v = dyn.step(start); !value_equal(v, start); v = dyn.step(v)) {
      if (orbit.size() > (1u << 22))
        throw std::logic_error("homomesy: orbit cap exceeded");
      orbit.push_back(v);
    }
    OrbitReport o;
    o.size = static_cast<int>(orbit.size());
    const Value* rep = &orbit.front();
    for (const Value& v : orbit) {
      visited.insert(value_to_text(v));
      o.sum += stat->eval(v);
      if (value_less(v, *rep)) rep = &v;
    }
    o.representative = value_to_text(*rep);
    o.average = Rational(o.sum, o.size);
    report.orbits.push_back(std::move(o));
  });

  report.orbit_count = static_cast<int>(report.orbits.size());
  report.homomesic = !report.orbits.empty();
  for (const OrbitReport& o : report.orbits)
    if (o.average != report.orbits.front().average) {
      report.homomesic = false;
      break;
    }
  if (report.homomesic) report.c = report.orbits.front().average;
  return report;
}

nlohmann::json to_json(const HomomesyReport& r) {
  nlohmann::json orbits = nlohmann::json::array();
  for (const OrbitReport& o : r.orbits)
    orbits.push_back({{"rep", o.representative},
                      {"size", o.size},
                      {"sum", o.sum},
                      {"avg", {o.average.num(), o.average.den()}}});
  nlohmann::json out{{"statistic", r.statistic},
                     {"dynamic", r.dynamic},
                     {"n", r.n},
                     {"orbit_count", r.orbit_count},
                     {"orbits", std::move(orbits)},
                     {"homomesic", r.homomesic}};
  if (r.c) out["c"] = {r.c->num(), r.c->den()};
  return out;
}

std::string to_text(const HomomesyReport& r) {
  std::ostringstream out;
  out << "statistic " << r.statistic << " under " << r.dynamic << ", n=" << r.n
      << ", orbits=" << r.orbit_count << "\n";
  for (const OrbitReport& o : r.orbits)
    out << "  rep " << o.representative << "  size=" << o.size
        << " sum=" << o.sum << " avg=" << o.average.str() << "\n";
  if (r.homomesic)
    out << "homomesic, c=" << r.c->str() << "\n";
  else
    out << "not homomesic\n";
  return out.str();
}

long long count_fixed_lka_ra(int n) {
  long long count = 0;
  for_each_antichain(n, [&](const AntichainA& a) {
    if (lka(rowmotion_a(a)) == a) ++count;
  });
  return count;
}

long long count_fixed_lka_ra_b(int m) {
  long long count = 0;
  for_each_antichain_b(m, [&](const AntichainB& b) {
    const AntichainA a = hat(b);
    if (lka(rowmotion_a(a)) == a) ++count;
  });
  return count;
}

long long count_avoiding_involutions(int n) {
  long long count = 0;
  for_each_avoider(n,
                   [&](const Permutation& p) { count += p.is_involution(); });
  return count;
}

long long count_123_involutions_rc_fixed(int n) {
  long long count = 0;
  for_each_avoider(n, [&](const Permutation& p) {
    const Permutation r = p.reversed();
    count += r.is_involution() && r.reverse_complement() == r;
  });
  return count;
}

}  // namespace combdyn
