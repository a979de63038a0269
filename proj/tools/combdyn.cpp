// Command line front end: apply bijections, dump orbits, evaluate homomesy
// reports, run theorem verification sweeps and enumerate object families.
//
// Exit codes: 0 success (pass / homomesic), 1 refuted (check failed or not
// homomesic), 2 usage or parse error, 3 precondition violation.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "combdyn/dynamics.hpp"
#include "combdyn/enumerate.hpp"
#include "combdyn/registry.hpp"
#include "combdyn/serialize.hpp"
#include "combdyn/statistics.hpp"
#include "combdyn/verification.hpp"

namespace {

using namespace combdyn;

int env_default_cap() {
  const char* env = std::getenv("COMBDYN_MAX_N");
  if (env == nullptr || *env == '\0') return 10;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1)
    throw std::invalid_argument("COMBDYN_MAX_N must be a positive integer");
  return static_cast<int>(v);
}

std::string read_input(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  std::string text = buffer.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.pop_back();
  return text;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

void require_cap(int size, int max_n) {
  if (size > max_n)
    throw std::invalid_argument(
        "size " + std::to_string(size) + " exceeds the cap " +
        std::to_string(max_n) + "; raise --max-n (or COMBDYN_MAX_N)");
}

void emit_value(const Value& v, const std::string& format) {
  if (format == "json")
    std::cout << value_to_json(v).dump() << "\n";
  else
    std::cout << value_to_text(v) << "\n";
}

std::string known_names(const auto& registry) {
  std::string out;
  for (const auto& [name, entry] : registry) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

int cmd_map(const std::string& name, const std::string& raw,
            std::optional<int> n, std::optional<int> m,
            const std::string& format) {
  const auto& registry = map_registry();
  auto it = registry.find(name);
  if (it == registry.end())
    throw std::invalid_argument("unknown map '" + name +
                                "'; known maps: " + known_names(registry));
  Value input = parse_value(it->second.input, read_input(raw), n, m);
  emit_value(it->second.apply(input), format);
  return 0;
}

int cmd_orbit(const std::string& name, const std::string& raw,
              std::optional<int> n, std::optional<int> m,
              const std::string& stats_csv, const std::string& format) {
  const auto& registry = dynamics_registry();
  auto it = registry.find(name);
  if (it == registry.end())
    throw std::invalid_argument("unknown dynamic '" + name +
                                "'; known dynamics: " + known_names(registry));
  const DynamicEntry& dyn = it->second;
  Value start = parse_value(dyn.kind, read_input(raw), n, m);

  std::vector<std::pair<std::string, StatisticEntry>> stats;
  for (const std::string& stat : split_csv(stats_csv)) {
    auto entry = find_statistic(stat, dyn.kind);
    if (!entry)
      throw std::invalid_argument("statistic '" + stat +
                                  "' is not defined for kind " +
                                  kind_name(dyn.kind));
    stats.emplace_back(stat, *entry);
  }

  std::vector<Value> orbit{start};
  for (Value v = dyn.step(start); !value_equal(v, start); v = dyn.step(v)) {
    orbit.push_back(v);
    if (orbit.size() > (1u << 22))
      throw std::logic_error("orbit exceeded the safety cap");
  }

  if (format == "json") {
    nlohmann::json elements = nlohmann::json::array();
    for (const Value& v : orbit) {
      if (stats.empty()) {
        elements.push_back(value_to_json(v));
      } else {
        nlohmann::json row{{"value", value_to_json(v)}};
        for (const auto& [stat, entry] : stats) row["stats"][stat] = entry.eval(v);
        elements.push_back(row);
      }
    }
    nlohmann::json out{{"dynamic", name},
                       {"size", orbit.size()},
                       {"elements", elements}};
    std::cout << out.dump() << "\n";
  } else {
    for (const Value& v : orbit) {
      std::cout << value_to_text(v);
      if (!stats.empty()) {
        std::cout << " ";
        for (const auto& [stat, entry] : stats)
          std::cout << " " << stat << "=" << entry.eval(v);
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_homomesy(const std::string& stat, const std::string& dynamic, int n,
                 int max_n, const std::string& format) {
  require_cap(n, max_n);
  HomomesyReport report = homomesy_report(stat, dynamic, n);
  if (format == "json")
    std::cout << to_json(report).dump() << "\n";
  else
    std::cout << to_text(report);
  return report.homomesic ? 0 : 1;
}

std::string format_seconds(double seconds) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2fs", seconds);
  return buffer;
}

int cmd_verify(const std::string& id, std::optional<int> n,
               std::optional<int> m, int jobs, const std::string& format) {
  if (jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
  std::vector<const TheoremCheck*> selected;
  if (id == "all") {
    for (const auto& check : theorem_checks()) selected.push_back(&check);
  } else {
    const TheoremCheck* check = find_theorem(id);
    if (check == nullptr) {
      std::string known;
      for (const auto& c : theorem_checks()) {
        if (!known.empty()) known += ", ";
        known += c.id;
      }
      throw std::invalid_argument("unknown theorem id '" + id +
                                  "'; known ids: " + known);
    }
    selected.push_back(check);
  }

  std::vector<VerificationResult> results(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        results[i] = run_theorem(*selected[i],
                                 selected[i]->param == 'n' ? n : m);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  int thread_count = std::min<int>(jobs, static_cast<int>(selected.size()));
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);

  bool all_pass = true;
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      nlohmann::json row{{"id", r.id},
                         {"range", r.range},
                         {"pass", r.pass},
                         {"seconds", r.seconds}};
      if (!r.detail.empty()) row["detail"] = r.detail;
      if (!r.pass) row["counterexample"] = r.counterexample;
      out.push_back(row);
    }
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.id << "  "
                << r.range << "  " << format_seconds(r.seconds);
      if (!r.pass)
        std::cout << "  counterexample: " << r.counterexample;
      else if (!r.detail.empty())
        std::cout << "  " << r.detail;
      std::cout << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_enumerate(const std::string& kind, std::optional<int> n,
                  std::optional<int> m, int max_n, const std::string& format) {
  bool json = format == "json";
  auto line = [&](const auto& object) {
    if (json)
      std::cout << to_json(object).dump() << "\n";
    else
      std::cout << to_text(object) << "\n";
  };
  auto size_of = [&](std::optional<int> value, const char* flag) {
    if (!value)
      throw std::invalid_argument(std::string(flag) + " is required for '" +
                                  kind + "'");
    require_cap(*value, max_n);
    return *value;
  };
  if (kind == "avoiders") {
    for_each_avoider(size_of(n, "--n"), [&](const Permutation& p) { line(p); });
  } else if (kind == "dyck") {
    for_each_dyck(size_of(n, "--n"), [&](const DyckWord& w) { line(w); });
  } else if (kind == "antichains") {
    for_each_antichain(size_of(n, "--n"),
                       [&](const AntichainA& a) { line(a); });
  } else if (kind == "antichains-b") {
    for_each_antichain_b(size_of(m ? m : n, "--m"),
                         [&](const AntichainB& a) { line(a); });
  } else if (kind == "matchings") {
    for_each_matching(size_of(n, "--n"),
                      [&](const NoncrossingMatching& x) { line(x); });
  } else if (kind == "csnc") {
    for_each_matching(size_of(n, "--n"), [&](const NoncrossingMatching& x) {
      if (is_centrally_symmetric(x)) line(x);
    });
  } else {
    throw std::invalid_argument(
        "unknown kind '" + kind +
        "'; known kinds: avoiders, dyck, antichains, antichains-b, "
        "matchings, csnc");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::string format = "text";
  int max_n = 10;
  int jobs = 1;
  std::optional<int> n, m;
  std::string map_name, orbit_name, stat_name, dynamic_name, theorem_id,
      enum_kind, input, stats_csv;

  CLI::App app{"Bijections, rowmotion orbits and homomesy reports on "
               "321-avoiding permutations and their Catalan relatives"};
  app.require_subcommand(1);

  try {
    max_n = env_default_cap();

    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--max-n", max_n,
                   "size cap for enumerative commands (env COMBDYN_MAX_N)")
        ->capture_default_str();

    CLI::App* map_cmd =
        app.add_subcommand("map", "apply a registered bijection to one object");
    map_cmd->fallthrough();
    map_cmd->add_option("name", map_name, "map name, e.g. exc, lk, rskd")
        ->required();
    map_cmd->add_option("input", input, "serialized object, or - for stdin")
        ->required();
    map_cmd->add_option("--n", n, "poset size for antichain or subset input");
    map_cmd->add_option("--m", m, "rank for type B antichain input");

    CLI::App* orbit_cmd =
        app.add_subcommand("orbit", "print the full orbit of an object");
    orbit_cmd->fallthrough();
    orbit_cmd->add_option("dynamic", orbit_name, "dynamic name, e.g. rs, ra")
        ->required();
    orbit_cmd->add_option("input", input, "serialized object, or - for stdin")
        ->required();
    orbit_cmd->add_option("--n", n, "poset size for antichain or subset input");
    orbit_cmd->add_option("--m", m, "rank for type B antichain input");
    orbit_cmd->add_option("--stats", stats_csv,
                          "comma separated statistics, e.g. fp,h2,l2,inv");

    CLI::App* homomesy_cmd = app.add_subcommand(
        "homomesy", "exact orbit averages of a statistic under a dynamic");
    homomesy_cmd->fallthrough();
    homomesy_cmd->add_option("statistic", stat_name)->required();
    homomesy_cmd->add_option("dynamic", dynamic_name)->required();
    homomesy_cmd->add_option("--n", n, "object size")->required();

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run a theorem check (or 'all') over its default range");
    verify_cmd->fallthrough();
    verify_cmd->add_option("theorem", theorem_id, "theorem id or 'all'")
        ->required();
    verify_cmd->add_option("--n", n, "override the upper end of an n range");
    verify_cmd->add_option("--m", m, "override the upper end of an m range");
    verify_cmd->add_option("--jobs", jobs, "worker threads for 'all'")
        ->capture_default_str();

    CLI::App* enum_cmd =
        app.add_subcommand("enumerate", "list one family, one object per line");
    enum_cmd->fallthrough();
    enum_cmd->add_option("kind", enum_kind,
                         "avoiders, dyck, antichains, antichains-b, "
                         "matchings or csnc")
        ->required();
    enum_cmd->add_option("--n", n, "object size");
    enum_cmd->add_option("--m", m, "type B rank");

    app.parse(argc, argv);

    if (app.got_subcommand(map_cmd))
      return cmd_map(map_name, input, n, m, format);
    if (app.got_subcommand(orbit_cmd))
      return cmd_orbit(orbit_name, input, n, m, stats_csv, format);
    if (app.got_subcommand(homomesy_cmd))
      return cmd_homomesy(stat_name, dynamic_name, n.value(), max_n, format);
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(theorem_id, n, m, jobs, format);
    if (app.got_subcommand(enum_cmd))
      return cmd_enumerate(enum_kind, n, m, max_n, format);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
