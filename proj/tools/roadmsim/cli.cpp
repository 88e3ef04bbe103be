#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "roadm/roadm.hpp"

namespace roadm::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Value parsing ----------------------------------------------------------------

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
    throw UsageError("invalid number '" + s + "' in " + what);
  }
  return v;
}

template <typename Int>
Int parse_int(const std::string& s, const std::string& what) {
  Int v{};
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
    throw UsageError("invalid integer '" + s + "' in " + what);
  }
  return v;
}

int decimals_of(const std::string& s) {
  const auto dot = s.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
}

/// "lo:hi:step", a single value, or a comma list. Range points are rounded to
/// the decimals written in the flag so 0:1:0.1 yields 0.3, not 0.30000000000000004.
std::vector<double> parse_loads(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("--a range must be lo:hi:step");
    const double lo = parse_double(parts[0], "--a");
    const double hi = parse_double(parts[1], "--a");
    const double step = parse_double(parts[2], "--a");
    if (!(step > 0.0) || hi < lo) throw UsageError("--a range needs step > 0 and hi >= lo");
    const int places = std::max({decimals_of(parts[0]), decimals_of(parts[1]), decimals_of(parts[2])});
    const double scale = std::pow(10.0, places);
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out;
    for (long i = 0; i < count; ++i) {
      out.push_back(std::round((lo + static_cast<double>(i) * step) * scale) / scale);
    }
    return out;
  }
  std::vector<double> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_double(p, "--a"));
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_int<int>(p, what));
  return out;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_double(p, what));
  return out;
}

/// "a..b" (inclusive) or a comma list.
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  if (auto pos = text.find(".."); pos != std::string::npos) {
    const auto lo = parse_int<std::uint64_t>(text.substr(0, pos), "--seeds");
    const auto hi = parse_int<std::uint64_t>(text.substr(pos + 2), "--seeds");
    if (hi < lo) throw UsageError("--seeds range must be ascending");
    if (hi - lo >= 1'000'000) throw UsageError("--seeds range too long");
    std::vector<std::uint64_t> out;
    for (auto s = lo; s <= hi; ++s) out.push_back(s);
    return out;
  }
  std::vector<std::uint64_t> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_int<std::uint64_t>(p, "--seeds"));
  return out;
}

// Config files -------------------------------------------------------------------

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

/// Appends values from a --config JSON file for flags not given on the
/// command line. A run manifest is accepted too: its "config" object is used.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (doc.contains("config") && doc.contains("command")) doc = doc["config"];
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");

  for (const auto& [key, value] : doc.items()) {
    const std::string flag = "--" + key;
    if (has_flag(args, flag)) continue;
    if (value.is_null()) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
      continue;
    }
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_array()) {
      for (const auto& v : value) {
        if (!text.empty()) text += ',';
        text += v.is_string() ? v.get<std::string>() : v.dump();
      }
    } else {
      text = value.dump();
    }
    args.push_back(flag);
    args.push_back(text);
  }
  return args;
}

// Output -----------------------------------------------------------------------

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

struct OutputFlags {
  std::string out;
  std::string json_path;
  bool timestamp = false;

  void add_to(CLI::App* app) {
    app->add_option("--out", out, "CSV output file (default: stdout)");
    app->add_option("--json", json_path, "JSON report file");
    app->add_flag("--timestamp", timestamp, "Record the wall-clock time in the manifest");
  }
};

class Reporter {
 public:
  Reporter(std::ostream& out, std::ostream& err, const OutputFlags& flags)
      : out_(out), err_(err), flags_(flags) {}

  RunManifest manifest(std::string command, json config, std::optional<std::uint64_t> seed) const {
    RunManifest m;
    m.version = kVersion;
    m.command = std::move(command);
    m.config = std::move(config);
    m.seed = seed;
    m.rng = std::string(kRngName);
    if (!flags_.out.empty()) m.outputs.push_back(flags_.out);
    if (!flags_.json_path.empty()) m.outputs.push_back(flags_.json_path);
    if (flags_.timestamp) m.timestamp = utc_timestamp();
    return m;
  }

  /// CSV to --out (plus manifest sidecar) or to stdout.
  void emit_csv(const std::string& csv, const RunManifest& m) const {
    if (flags_.out.empty()) {
      out_ << csv;
      return;
    }
    write_file(flags_.out, csv);
    write_file(flags_.out + ".manifest.json", m.to_json().dump(2) + "\n");
  }

  void emit_json(const json& report) const {
    if (!flags_.json_path.empty()) write_file(flags_.json_path, report.dump(2) + "\n");
  }

  /// Human-readable lines go where they do not interleave with CSV.
  std::ostream& summary() const { return flags_.out.empty() ? err_ : out_; }
  std::ostream& err() const { return err_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  const OutputFlags& flags_;
};

// analytic -----------------------------------------------------------------------

struct AnalyticArgs {
  std::optional<int> n;
  std::optional<int> m;
  std::string a;
  std::string d;
  int samples = kDefaultLoadSamples;
  std::string lambda = "1";
  bool clamp = false;
  std::string summary_path;
  OutputFlags io;
};

void setup_analytic(CLI::App& app, AnalyticArgs& args) {
  auto* sub = app.add_subcommand("analytic", "Closed-form blocking sweep and load-averaged blocking");
  sub->add_option("--n", args.n, "Line cards per line chassis (N)");
  sub->add_option("--m", args.m, "Interconnect chassis (M)");
  sub->add_option("--a", args.a, "Per-card loads: lo:hi:step, a value, or a comma list");
  sub->add_option("--d", args.d, "Packing degrees, comma list");
  sub->add_option("--samples", args.samples, "Load samples for the averaged blocking")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  sub->add_option("--lambda", args.lambda, "Per-degree offered loads, comma list");
  sub->add_flag("--clamp", args.clamp, "Report P_b = 1 for saturated cells (N a > M)");
  sub->add_option("--summary", args.summary_path, "CSV file for the load-averaged summary");
  args.io.add_to(sub);
}

int run_analytic(const AnalyticArgs& args, CLI::App& sub, std::ostream& out, std::ostream& err) {
  if (!args.n || !args.m || args.a.empty() || args.d.empty()) {
    throw UsageError("analytic requires --n, --m, --a and --d\n" + sub.help());
  }
  const int n = *args.n;
  const int m = *args.m;
  const auto loads = parse_loads(args.a);
  const auto ds = parse_int_list(args.d, "--d");
  const auto lambda = parse_double_list(args.lambda, "--lambda");

  const ClusterConfig cfg{n, m, 1, 0};
  const auto cells = analytic_sweep(cfg, loads, ds, {args.clamp});
  for (const auto& c : cells) {
    if (!c.blocking) {
      err << "roadmsim: domain error at cell (a=" << format_number(c.a) << ", d=" << c.d
          << "): " << c.error << "\n";
      return kExitRuntime;
    }
  }
  std::vector<LoadAverageRow> averages;
  for (int d : ds) {
    LoadAverageRow row{d, args.samples, std::nullopt, {}};
    try {
      row.blocking = load_averaged_blocking(n, m, d, lambda, args.samples);
    } catch (const DomainError& e) {
      err << "roadmsim: load-averaged blocking failed for d=" << d << ": " << e.what() << "\n";
      return kExitRuntime;
    }
    averages.push_back(row);
  }

  json config = {{"n", n}, {"m", m}, {"a", args.a}, {"d", args.d},
                 {"samples", args.samples}, {"lambda", args.lambda}, {"clamp", args.clamp}};
  Reporter rep(out, err, args.io);
  const auto manifest = rep.manifest("analytic", config, std::nullopt);
  rep.emit_csv(sweep_csv(cells), manifest);
  rep.emit_json(sweep_json(cells, averages, manifest));
  if (!args.summary_path.empty()) {
    write_file(args.summary_path, load_average_csv(averages));
  } else {
    for (const auto& r : averages) {
      rep.summary() << "load-averaged P_b (d=" << r.d << ", " << r.samples + 1
                    << " load points): " << format_number(*r.blocking) << "\n";
    }
  }
  return kExitOk;
}

// montecarlo ---------------------------------------------------------------------

struct MonteCarloArgs {
  std::string case_name;
  std::optional<int> e;
  std::optional<int> f;
  int n = 14;
  int m = 16;
  int maps = 1;
  int connections = kDefaultConnectionsPerMap;
  int wavelengths = kDefaultWavelengths;
  std::uint64_t seed = 1;
  std::string pattern = "proposed";
  std::uint64_t pattern_seed = 1;
  std::optional<double> add_drop_weight;
  int workers = 0;
  OutputFlags io;
};

void setup_montecarlo(CLI::App& app, MonteCarloArgs& args) {
  auto* sub = app.add_subcommand("montecarlo", "Full-load Monte Carlo blocking of cluster scenarios");
  sub->add_option("--case", args.case_name, "Scenario 1..5 or 'all'");
  sub->add_option("--e", args.e, "Line chassis (custom scenario)");
  sub->add_option("--f", args.f, "Add/drop chassis (custom scenario)");
  sub->add_option("--n", args.n, "Line cards per line chassis (N)");
  sub->add_option("--m", args.m, "Interconnect chassis (M)");
  sub->add_option("--maps", args.maps, "Independent connectivity maps per scenario")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  sub->add_option("--connections", args.connections, "Requests per connectivity map")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  sub->add_option("--wavelengths", args.wavelengths, "Wavelength planes (W)")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  sub->add_option("--seed", args.seed, "Traffic seed");
  sub->add_option("--pattern", args.pattern, "Interconnection pattern: proposed | random")
      ->check(CLI::IsMember({"proposed", "random"}));
  sub->add_option("--pattern-seed", args.pattern_seed, "Seed of the random interconnection pattern");
  sub->add_option("--add-drop-weight", args.add_drop_weight,
                  "Selection weight of the add/drop pool (default F/E)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--workers", args.workers, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  args.io.add_to(sub);
}

int run_montecarlo(const MonteCarloArgs& args, CLI::App& sub, std::ostream& out, std::ostream& err) {
  const bool custom = args.e || args.f;
  if (custom == !args.case_name.empty()) {
    throw UsageError("montecarlo needs either --case or both --e and --f\n" + sub.help());
  }
  if (custom && !(args.e && args.f)) throw UsageError("custom scenarios need both --e and --f");

  SimConfig sim;
  sim.connections_per_map = args.connections;
  sim.wavelengths = args.wavelengths;
  sim.maps = args.maps;
  sim.seed = args.seed;
  sim.pattern = {parse_pattern_kind(args.pattern), args.pattern_seed};
  sim.add_drop_weight = args.add_drop_weight;
  sim.workers = args.workers;

  std::vector<ScenarioCase> cases;
  if (custom) {
    cases.push_back({"custom", ClusterConfig{args.n, args.m, *args.e, *args.f}, sim});
  } else {
    auto table = reference_cases(sim);
    for (auto& c : table) {
      c.config.line_cards = args.n;
      c.config.connection_cards = args.m;
    }
    if (args.case_name == "all") {
      cases = table;
    } else if (args.case_name.size() == 1 && args.case_name[0] >= '1' && args.case_name[0] <= '5') {
      cases.push_back(table[static_cast<std::size_t>(args.case_name[0] - '1')]);
    } else {
      throw UsageError("unknown case '" + args.case_name + "' (expected 1..5 or all)");
    }
  }

  for (const auto& c : cases) {
    validate(c.config);
    for (const auto& w : validate_sizing(c.config)) {
      err << "roadmsim: warning: case " << c.label << ": " << w.message << "\n";
      if (w.code == SizingWarning::Code::BlockingFabric) {
        err << "roadmsim: invalid sizing for case " << c.label << "\n";
        return kExitRuntime;
      }
    }
  }

  const auto report = run_scenarios(cases);

  json config = {{"n", args.n}, {"m", args.m}, {"maps", args.maps},
                 {"connections", args.connections}, {"wavelengths", args.wavelengths},
                 {"seed", args.seed}, {"pattern", args.pattern}, {"pattern-seed", args.pattern_seed}};
  if (custom) {
    config["e"] = *args.e;
    config["f"] = *args.f;
  } else {
    config["case"] = args.case_name;
  }
  if (args.add_drop_weight) config["add-drop-weight"] = *args.add_drop_weight;

  Reporter rep(out, err, args.io);
  const auto manifest = rep.manifest("montecarlo", config, args.seed);
  rep.emit_csv(scenario_csv(report), manifest);
  rep.emit_json(scenario_json(report, manifest));

  bool failed = false;
  for (const auto& row : report.rows) {
    auto& s = rep.summary();
    s << "case " << row.label << ": E=" << row.config.line_chassis << " F=" << row.config.add_drop_chassis
      << " degrees=" << row.degrees << " add/drop=" << std::lround(row.add_drop_rate * 100) << "%";
    if (row.result) {
      const auto& r = *row.result;
      s << " blocked=" << r.blocked << "/" << r.offered << " rate=" << format_number(r.blocking_rate)
        << " ci95=[" << format_number(r.ci95.lower) << ", " << format_number(r.ci95.upper) << "]\n";
    } else {
      s << " error: " << row.error << "\n";
      failed = true;
    }
  }
  return failed ? kExitRuntime : kExitOk;
}

// eon ------------------------------------------------------------------------------

struct EonArgs {
  OutputFlags table_io;
  int routers = 6;
  int demands = 500;
  std::string seeds = "1..20";
  int slots = kDefaultGridSlots;
  std::string mode = "new-design";
  OutputFlags compare_io;
};

void setup_eon(CLI::App& app, EonArgs& args) {
  auto* eon = app.add_subcommand("eon", "Elastic optical network spectrum studies");
  eon->require_subcommand(1);
  auto* table = eon->add_subcommand("table2", "Channel widths of the elastic modes at anchor bit rates");
  args.table_io.add_to(table);
  auto* cmp = eon->add_subcommand("compare", "Carried traffic, elastic vs fixed 50 GHz WDM");
  cmp->add_option("--routers", args.routers, "Routers in the complete reference network")
      ->check(CLI::Range(2, std::numeric_limits<int>::max()));
  cmp->add_option("--demands", args.demands, "Demands per seed")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  cmp->add_option("--seeds", args.seeds, "Seeds: a..b or a comma list");
  cmp->add_option("--slots", args.slots, "12.5 GHz slots per link")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  cmp->add_option("--mode", args.mode, "Elastic width mode: new-design | original-eon")
      ->check(CLI::IsMember({"new-design", "original-eon"}));
  args.compare_io.add_to(cmp);
}

int run_table2(const EonArgs& args, std::ostream& out, std::ostream& err) {
  Reporter rep(out, err, args.table_io);
  const auto manifest = rep.manifest("eon table2", json::object(), std::nullopt);
  rep.emit_csv(table2_csv(), manifest);
  rep.emit_json(table2_json(manifest));
  return kExitOk;
}

int run_compare(const EonArgs& args, std::ostream& out, std::ostream& err) {
  ComparisonSetup setup;
  setup.routers = args.routers;
  setup.demands = args.demands;
  setup.slots_per_link = args.slots;
  setup.elastic_mode = args.mode == "original-eon" ? WidthMode::OriginalEON : WidthMode::NewDesign;
  const auto seeds = parse_seeds(args.seeds);
  const auto report = compare_approaches(setup, seeds);

  json config = {{"routers", args.routers}, {"demands", args.demands}, {"seeds", args.seeds},
                 {"slots", args.slots}, {"mode", args.mode}};
  Reporter rep(out, err, args.compare_io);
  const auto manifest = rep.manifest("eon compare", config, seeds.front());
  rep.emit_csv(comparison_csv(report), manifest);
  rep.emit_json(comparison_json(report, manifest));
  rep.summary() << "carried-traffic ratio " << to_string(setup.elastic_mode) << "/fixed-wdm over "
                << report.rows.size() << " seeds: mean " << format_number(report.mean_ratio)
                << " (min " << format_number(report.min_ratio) << ", max "
                << format_number(report.max_ratio) << "); improvement "
                << std::fixed << std::setprecision(1) << (report.mean_ratio - 1.0) * 100.0
                << "% vs reference 20%\n";
  rep.summary().unsetf(std::ios::floatfield);
  return kExitOk;
}

// topology -----------------------------------------------------------------------

struct TopologyArgs {
  int n = 14;
  int m = 16;
  int e = 16;
  int f = 0;
  std::string pattern = "proposed";
  std::uint64_t pattern_seed = 1;
  std::string out;
};

void setup_topology(CLI::App& app, TopologyArgs& args) {
  auto* sub = app.add_subcommand("topology", "Dump a cluster topology as JSON");
  sub->add_option("--n", args.n, "Line cards per line chassis (N)");
  sub->add_option("--m", args.m, "Interconnect chassis (M)");
  sub->add_option("--e", args.e, "Line chassis (E)");
  sub->add_option("--f", args.f, "Add/drop chassis (F)");
  sub->add_option("--pattern", args.pattern, "proposed | random")
      ->check(CLI::IsMember({"proposed", "random"}));
  sub->add_option("--pattern-seed", args.pattern_seed, "Seed of the random pattern");
  sub->add_option("--out", args.out, "Output file (default: stdout)");
}

int run_topology(const TopologyArgs& args, std::ostream& out, std::ostream& err) {
  const ClusterConfig cfg{args.n, args.m, args.e, args.f};
  const auto topo = build_cluster(cfg, {parse_pattern_kind(args.pattern), args.pattern_seed});
  json doc = to_json(topo);
  json classification = {{"nonblocking", to_string(classify_nonblocking(cfg.line_cards, cfg.connection_cards))}};
  json warnings = json::array();
  for (const auto& w : validate_sizing(cfg)) warnings.push_back(w.message);
  classification["warnings"] = std::move(warnings);
  doc["classification"] = std::move(classification);
  const std::string text = doc.dump(2) + "\n";
  if (args.out.empty()) {
    out << text;
  } else {
    write_file(args.out, text);
  }
  (void)err;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"roadmsim: ROADM cluster-node blocking and elastic spectrum toolkit", "roadmsim"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  AnalyticArgs analytic;
  MonteCarloArgs montecarlo;
  EonArgs eon;
  TopologyArgs topology;
  setup_analytic(app, analytic);
  setup_montecarlo(app, montecarlo);
  setup_eon(app, eon);
  setup_topology(app, topology);

  try {
    auto args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "roadmsim: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "roadmsim: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (auto* sub = app.get_subcommand("analytic"); sub->parsed()) {
      return run_analytic(analytic, *sub, out, err);
    }
    if (auto* sub = app.get_subcommand("montecarlo"); sub->parsed()) {
      return run_montecarlo(montecarlo, *sub, out, err);
    }
    if (auto* sub = app.get_subcommand("eon"); sub->parsed()) {
      if (sub->get_subcommand("table2")->parsed()) return run_table2(eon, out, err);
      return run_compare(eon, out, err);
    }
    return run_topology(topology, out, err);
  } catch (const UsageError& e) {
    err << "roadmsim: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "roadmsim: error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace roadm::cli
