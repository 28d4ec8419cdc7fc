// Command-line front end: run protocols exactly, sweep parameters, sample
// trials, and tune the dark port. Emits insertion-ordered JSON or CSV with
// 12-significant-digit numbers (see schemas/ for the JSON document shapes).
//
// Exit codes: 0 success, 1 internal error, 2 validation error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ifm/generalized.hpp"
#include "ifm/montecarlo.hpp"
#include "ifm/protocols.hpp"
#include "ifm/serialize.hpp"

namespace {

using namespace ifm;

constexpr int kSchemaVersion = 1;

/// Raised for anything the user can fix; mapped to exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

enum class ParamType { real, integer, boolean, text };

struct ParamSpec {
  std::string name;
  ParamType type = ParamType::real;
  bool required = true;
  ParamValue default_value{};
  std::string help;
  std::function<void(const std::string&, const ParamValue&)> check;  // throws ValidationError
};

struct BoundParams {
  std::vector<std::pair<std::string, ParamValue>> values;  // in ParamSpec order

  const ParamValue& at(const std::string& name) const {
    for (const auto& [key, value] : values)
      if (key == name) return value;
    throw std::logic_error("unbound parameter '" + name + "'");
  }
  double real(const std::string& name) const {
    const ParamValue& v = at(name);
    if (const double* d = std::get_if<double>(&v)) return *d;
    if (const std::int64_t* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    throw ValidationError("parameter '" + name + "' must be a number");
  }
  std::int64_t integer(const std::string& name) const {
    const ParamValue& v = at(name);
    if (const std::int64_t* i = std::get_if<std::int64_t>(&v)) return *i;
    if (const double* d = std::get_if<double>(&v)) {
      if (*d == static_cast<double>(static_cast<std::int64_t>(*d)))
        return static_cast<std::int64_t>(*d);
    }
    throw ValidationError("parameter '" + name + "' must be an integer");
  }
  bool boolean(const std::string& name) const {
    const ParamValue& v = at(name);
    if (const bool* b = std::get_if<bool>(&v)) return *b;
    throw ValidationError("parameter '" + name + "' must be true or false");
  }
  std::string text(const std::string& name) const {
    const ParamValue& v = at(name);
    if (const std::string* s = std::get_if<std::string>(&v)) return *s;
    throw ValidationError("parameter '" + name + "' must be a string");
  }
};

struct RunResult {
  ProtocolOutcome outcome;
  std::optional<std::string> post_system_state;  // generalized scheme only
};

struct ProtocolDef {
  Protocol id;
  std::string help;
  std::vector<ParamSpec> params;
  std::vector<std::string> labels;  // fixed outcome columns, lexicographic
  std::function<RunResult(const BoundParams&)> run;
};

void check_open_unit(const std::string& name, const ParamValue& v) {
  const double x = std::holds_alternative<std::int64_t>(v)
                       ? static_cast<double>(std::get<std::int64_t>(v))
                       : std::get<double>(v);
  if (!(x > 0.0 && x < 1.0))
    throw ValidationError("parameter '" + name + "' must lie strictly between 0 and 1");
}

ParamSpec real_param(std::string name, std::string help,
                     std::function<void(const std::string&, const ParamValue&)> check = {}) {
  ParamSpec p;
  p.name = std::move(name);
  p.type = ParamType::real;
  p.help = std::move(help);
  p.check = std::move(check);
  return p;
}

ParamSpec optional_real(std::string name, double dflt, std::string help) {
  ParamSpec p = real_param(std::move(name), std::move(help));
  p.required = false;
  p.default_value = dflt;
  return p;
}

ParamSpec int_param(std::string name, std::string help,
                    std::function<void(const std::string&, const ParamValue&)> check = {}) {
  ParamSpec p;
  p.name = std::move(name);
  p.type = ParamType::integer;
  p.help = std::move(help);
  p.check = std::move(check);
  return p;
}

ParamSpec bool_param(std::string name, bool dflt, std::string help) {
  ParamSpec p;
  p.name = std::move(name);
  p.type = ParamType::boolean;
  p.required = false;
  p.default_value = dflt;
  p.help = std::move(help);
  return p;
}

const std::vector<ProtocolDef>& protocol_table() {
  static const std::vector<ProtocolDef> table = [] {
    std::vector<ProtocolDef> defs;

    auto run_ev = [](const BoundParams& p) {
      return RunResult{ev_mine_test(p.real("R"), p.boolean("present")), std::nullopt};
    };
    std::vector<ParamSpec> ev_params = {
        real_param("R", "first-splitter reflectivity in (0,1)", check_open_unit),
        bool_param("present", true, "whether the absorbing object is there"),
    };

    defs.push_back({Protocol::ev,
                    "single shot through a dark-port-tuned interferometer with an absorbing "
                    "object blocking the reflected arm; D2 clicks only when the object is there",
                    ev_params,
                    {"D1", "D2", "explosion"},
                    run_ev});
    defs.push_back({Protocol::penrose,
                    "alias of ev: identical mathematics, framed with the absorber replacing one "
                    "interferometer mirror instead of blocking an arm",
                    ev_params,
                    {"D1", "D2", "explosion"},
                    run_ev});
    defs.push_back({Protocol::repeated_ev,
                    "rerun the single-shot test on every D1 click until D2 or absorption; "
                    "reports the terminating distribution and expected round count",
                    {real_param("R", "first-splitter reflectivity in (0,1)", check_open_unit)},
                    {"D1", "D2", "explosion"},
                    [](const BoundParams& p) {
                      return RunResult{repeated_ev(p.real("R")), std::nullopt};
                    }});
    defs.push_back({Protocol::zeno,
                    "N weak coupling stages between a safe mode and the object mode, the object "
                    "absorbing after each stage; survival in the safe mode approaches 1",
                    {int_param("N", "number of coupling stages, >= 1",
                               [](const std::string& name, const ParamValue& v) {
                                 if (std::get<std::int64_t>(v) < 1)
                                   throw ValidationError("parameter '" + name + "' must be >= 1");
                               }),
                     bool_param("present", true, "whether the absorbing object is there")},
                    {"explosion", "object_side", "safe"},
                    [](const BoundParams& p) {
                      return RunResult{
                          zeno_ifm({p.integer("N"), p.boolean("present")}), std::nullopt};
                    }});
    defs.push_back({Protocol::xray,
                    "two cavities coupled by a weakly transmitting mirror; an absorber on the "
                    "right keeps the photon on the left at small per-bounce crossing",
                    {real_param("transmission", "per-bounce crossing probability in (0,1)",
                                check_open_unit),
                     int_param("bounces", "number of bounces, >= 0",
                               [](const std::string& name, const ParamValue& v) {
                                 if (std::get<std::int64_t>(v) < 0)
                                   throw ValidationError("parameter '" + name + "' must be >= 0");
                               }),
                     bool_param("absorber", true, "whether the right side absorbs")},
                    {"absorbed", "left", "right"},
                    [](const BoundParams& p) {
                      const OutcomeDistribution dist = xray_cavity(
                          {p.real("transmission"), p.integer("bounces"), p.boolean("absorber")});
                      RunResult r;
                      r.outcome.distribution = dist;
                      r.outcome.efficiency = efficiency(dist, "left", "absorbed");
                      r.outcome.rounds_expected = 1.0;
                      return r;
                    }});
    defs.push_back(
        {Protocol::generalized,
         "abstract scheme: device prepared as alpha*Phi1 + beta*Phi2, readout discriminates "
         "chi from chi_perp; a chi_perp click certifies the system state undisturbed",
         {real_param("alpha_re", "Re(alpha)"), optional_real("alpha_im", 0.0, "Im(alpha)"),
          real_param("beta_re", "Re(beta)"), optional_real("beta_im", 0.0, "Im(beta)"),
          [] {
            ParamSpec p;
            p.name = "system";
            p.type = ParamType::text;
            p.required = false;
            p.default_value = std::string("psi");
            p.help = "system input: psi or psi_perp";
            p.check = [](const std::string& name, const ParamValue& v) {
              const std::string& s = std::get<std::string>(v);
              if (s != "psi" && s != "psi_perp")
                throw ValidationError("parameter '" + name + "' must be psi or psi_perp");
            };
            return p;
          }()},
         {"chi", "chi_perp", "explosion"},
         [](const BoundParams& p) {
           GeneralizedIfmConfig cfg;
           cfg.alpha = Amplitude{p.real("alpha_re"), p.real("alpha_im")};
           cfg.beta = Amplitude{p.real("beta_re"), p.real("beta_im")};
           cfg.system_is_psi = p.text("system") == "psi";
           const IfmResult res = run_generalized_ifm(cfg);
           RunResult r;
           r.outcome.distribution = res.probs;
           r.outcome.efficiency = efficiency(res.probs, "chi_perp", "explosion");
           r.outcome.rounds_expected = 1.0;
           r.post_system_state = res.post_system_state_on_chi_perp;
           return r;
         }});
    return defs;
  }();
  return table;
}

const ProtocolDef& protocol_def(Protocol id) {
  for (const auto& def : protocol_table())
    if (def.id == id) return def;
  throw std::logic_error("protocol missing from table");
}

/// Coerce a raw parameter value to the spec's type, or explain why not.
ParamValue coerce(const ParamSpec& spec, const ParamValue& raw) {
  switch (spec.type) {
    case ParamType::real:
      if (const double* d = std::get_if<double>(&raw)) return *d;
      if (const std::int64_t* i = std::get_if<std::int64_t>(&raw))
        return static_cast<double>(*i);
      throw ValidationError("parameter '" + spec.name + "' must be a number");
    case ParamType::integer:
      if (const std::int64_t* i = std::get_if<std::int64_t>(&raw)) return *i;
      if (const double* d = std::get_if<double>(&raw)) {
        if (*d == static_cast<double>(static_cast<std::int64_t>(*d)))
          return static_cast<std::int64_t>(*d);
      }
      throw ValidationError("parameter '" + spec.name + "' must be an integer");
    case ParamType::boolean:
      if (const bool* b = std::get_if<bool>(&raw)) return *b;
      throw ValidationError("parameter '" + spec.name + "' must be true or false");
    case ParamType::text:
      if (const std::string* s = std::get_if<std::string>(&raw)) return *s;
      throw ValidationError("parameter '" + spec.name + "' must be a string");
  }
  throw std::logic_error("unreachable parameter type");
}

/// Validates completeness and ranges before anything executes.
BoundParams bind_params(const ProtocolDef& def, const std::map<std::string, ParamValue>& raw) {
  for (const auto& [name, value] : raw) {
    bool known = false;
    for (const auto& spec : def.params) known = known || spec.name == name;
    if (!known)
      throw ValidationError("unknown parameter '" + name + "' for protocol '" +
                            protocol_name(def.id) + "'");
  }
  BoundParams bound;
  for (const auto& spec : def.params) {
    auto it = raw.find(spec.name);
    if (it == raw.end()) {
      if (spec.required)
        throw ValidationError("missing required parameter '" + spec.name + "' for protocol '" +
                              protocol_name(def.id) + "'");
      bound.values.emplace_back(spec.name, spec.default_value);
      continue;
    }
    ParamValue value = coerce(spec, it->second);
    if (spec.check) spec.check(spec.name, value);
    bound.values.emplace_back(spec.name, value);
  }
  return bound;
}

// ---------------------------------------------------------------------------
// Document builders
// ---------------------------------------------------------------------------

void write_params(JsonWriter& w, const BoundParams& params) {
  w.key("params").begin_object();
  for (const auto& [name, value] : params.values) w.key(name).value(value);
  w.end_object();
}

void write_distribution(JsonWriter& w, const std::vector<std::string>& labels,
                        const OutcomeDistribution& dist) {
  w.key("distribution").begin_object();
  for (const auto& label : labels) w.key(label).value(dist.prob(label));
  w.end_object();
}

std::string run_document_json(const ProtocolDef& def, const BoundParams& params,
                              const RunResult& result) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(kSchemaVersion);
  w.key("command").value("run");
  w.key("protocol").value(protocol_name(def.id));
  w.key("mode").value("exact");
  write_params(w, params);
  write_distribution(w, def.labels, result.outcome.distribution);
  w.key("efficiency").value(result.outcome.efficiency);
  w.key("rounds_expected").value(result.outcome.rounds_expected);
  if (def.id == Protocol::generalized) {
    w.key("post_system_state_on_chi_perp");
    if (result.post_system_state)
      w.value(*result.post_system_state);
    else
      w.null();
  }
  w.end_object();
  return w.str();
}

std::string run_document_csv(const ProtocolDef& def, const RunResult& result) {
  std::string header;
  std::string row;
  for (const auto& label : def.labels) {
    header += label + ",";
    row += format_number(result.outcome.distribution.prob(label)) + ",";
  }
  header += "efficiency,rounds_expected";
  row += format_number(result.outcome.efficiency) + "," +
         format_number(result.outcome.rounds_expected);
  if (def.id == Protocol::generalized) {
    header += ",post_system_state_on_chi_perp";
    row += "," + result.post_system_state.value_or("");
  }
  return header + "\n" + row + "\n";
}

std::string sample_document_json(const ProtocolDef& def, const BoundParams& params,
                                 const OutcomeDistribution& dist, const TrialLedger& ledger,
                                 const ChiSquareResult& chi) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(kSchemaVersion);
  w.key("command").value("sample");
  w.key("protocol").value(protocol_name(def.id));
  w.key("mode").value("sample");
  write_params(w, params);
  w.key("master_seed").value(ledger.master_seed);
  w.key("trials").value(ledger.trials);
  w.key("counts").begin_object();
  for (const auto& label : def.labels) {
    auto it = ledger.counts.find(label);
    w.key(label).value(it == ledger.counts.end() ? std::uint64_t{0} : it->second);
  }
  w.end_object();
  w.key("frequencies").begin_object();
  for (const auto& label : def.labels) {
    auto it = ledger.counts.find(label);
    const double count = it == ledger.counts.end() ? 0.0 : static_cast<double>(it->second);
    w.key(label).value(ledger.trials == 0 ? 0.0 : count / static_cast<double>(ledger.trials));
  }
  w.end_object();
  write_distribution(w, def.labels, dist);
  w.key("chi_square").begin_object();
  w.key("statistic").value(chi.statistic);
  w.key("dof").value(chi.dof);
  w.key("pass").value(chi.pass);
  w.end_object();
  w.end_object();
  return w.str();
}

std::string sample_document_csv(const ProtocolDef& def, const OutcomeDistribution& dist,
                                const TrialLedger& ledger) {
  std::string out = "outcome,count,frequency,expected\n";
  for (const auto& label : def.labels) {
    auto it = ledger.counts.find(label);
    const std::uint64_t count = it == ledger.counts.end() ? 0 : it->second;
    const double freq =
        ledger.trials == 0 ? 0.0
                           : static_cast<double>(count) / static_cast<double>(ledger.trials);
    out += label + "," + std::to_string(count) + "," + format_number(freq) + "," +
           format_number(dist.prob(label)) + "\n";
  }
  return out;
}

struct SweepRow {
  ParamValue value;
  RunResult result;
};

std::string sweep_document_json(const ProtocolDef& def, const std::string& sweep_param,
                                const BoundParams& fixed, const std::vector<SweepRow>& rows) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(kSchemaVersion);
  w.key("command").value("sweep");
  w.key("protocol").value(protocol_name(def.id));
  w.key("sweep_param").value(sweep_param);
  w.key("params").begin_object();
  for (const auto& [name, value] : fixed.values)
    if (name != sweep_param) w.key(name).value(value);
  w.end_object();
  w.key("rows").begin_array();
  for (const auto& row : rows) {
    w.begin_object();
    w.key(sweep_param).value(row.value);
    write_distribution(w, def.labels, row.result.outcome.distribution);
    w.key("efficiency").value(row.result.outcome.efficiency);
    w.key("rounds_expected").value(row.result.outcome.rounds_expected);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string sweep_document_csv(const ProtocolDef& def, const std::string& sweep_param,
                               const std::vector<SweepRow>& rows) {
  std::string out = sweep_param;
  for (const auto& label : def.labels) out += "," + label;
  out += ",efficiency,rounds_expected\n";
  for (const auto& row : rows) {
    std::visit(detail::Overloaded{
                   [&](double v) { out += format_number(v); },
                   [&](std::int64_t v) { out += std::to_string(v); },
                   [&](bool v) { out += v ? "true" : "false"; },
                   [&](const std::string& v) { out += v; },
               },
               row.value);
    for (const auto& label : def.labels)
      out += "," + format_number(row.result.outcome.distribution.prob(label));
    out += "," + format_number(row.result.outcome.efficiency) + "," +
           format_number(row.result.outcome.rounds_expected) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Command execution
// ---------------------------------------------------------------------------

/// Zero-fills the fixed label set so ledgers always carry every column.
OutcomeDistribution with_fixed_labels(const ProtocolDef& def, OutcomeDistribution dist) {
  for (const auto& label : def.labels)
    if (dist.probs.find(label) == dist.probs.end()) dist.probs[label] = 0.0;
  return dist;
}

std::string execute_run(const RunRequest& req) {
  const ProtocolDef& def = protocol_def(req.protocol);
  const BoundParams params = bind_params(def, req.params);
  const RunResult result = def.run(params);
  if (req.mode == RunMode::sample) {
    if (req.trials < 0) throw ValidationError("trials must be >= 0");
    const OutcomeDistribution dist =
        with_fixed_labels(def, result.outcome.distribution);
    const TrialLedger ledger = sample(dist, req.trials, req.seed);
    const ChiSquareResult chi = chi_square_check(ledger, dist);
    return req.format == OutputFormat::json
               ? sample_document_json(def, params, dist, ledger, chi) + "\n"
               : sample_document_csv(def, dist, ledger);
  }
  return req.format == OutputFormat::json ? run_document_json(def, params, result) + "\n"
                                          : run_document_csv(def, result);
}

std::vector<ParamValue> parse_grid(const ProtocolDef& def, const std::string& sweep_param,
                                   const std::string& grid_text) {
  const ParamSpec* spec = nullptr;
  for (const auto& p : def.params)
    if (p.name == sweep_param) spec = &p;
  if (spec == nullptr)
    throw ValidationError("unknown sweep parameter '" + sweep_param + "' for protocol '" +
                          protocol_name(def.id) + "'");
  std::vector<ParamValue> grid;
  std::stringstream ss(grid_text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    grid.push_back(coerce(*spec, parse_param_value(token)));
  }
  if (grid.empty()) throw ValidationError("grid is empty");
  return grid;
}

std::string execute_sweep(const RunRequest& req, const std::string& sweep_param,
                          const std::string& grid_text) {
  const ProtocolDef& def = protocol_def(req.protocol);
  const std::vector<ParamValue> grid = parse_grid(def, sweep_param, grid_text);

  // Validate every row before producing any output.
  std::vector<BoundParams> bound_rows;
  for (const ParamValue& value : grid) {
    std::map<std::string, ParamValue> row_params = req.params;
    row_params[sweep_param] = value;
    bound_rows.push_back(bind_params(def, row_params));
  }

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    rows.push_back({grid[i], def.run(bound_rows[i])});

  return req.format == OutputFormat::json
             ? sweep_document_json(def, sweep_param, bound_rows.front(), rows) + "\n"
             : sweep_document_csv(def, sweep_param, rows);
}

std::string execute_tune(double t1, OutputFormat format) {
  const double t2 = tune_dark_port(t1);
  if (format == OutputFormat::csv)
    return "t1,t2\n" + format_number(t1) + "," + format_number(t2) + "\n";
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(kSchemaVersion);
  w.key("command").value("tune");
  w.key("t1").value(t1);
  w.key("t2").value(t2);
  w.end_object();
  return w.str() + "\n";
}

std::map<std::string, ParamValue> parse_param_args(const std::vector<std::string>& args) {
  std::map<std::string, ParamValue> params;
  for (const auto& arg : args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ValidationError("expected key=value in --param, got '" + arg + "'");
    params[arg.substr(0, eq)] = parse_param_value(arg.substr(eq + 1));
  }
  return params;
}

RunRequest load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
    return run_request_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("invalid config file '" + path + "': " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-photon interferometer simulator and interaction-free measurement toolkit"};
  app.require_subcommand(1);

  std::string protocol_arg;
  std::string config_path;
  std::string format_arg;
  std::string sweep_param;
  std::string grid_text;
  std::vector<std::string> param_args;
  std::int64_t trials_arg = 0;
  std::uint64_t seed_arg = 0;
  double t1_arg = 0.0;

  const std::string protocol_help =
      "protocol name: penrose, ev, repeated_ev, zeno, xray, generalized";

  CLI::App* cmd_run = app.add_subcommand("run", "evaluate one protocol exactly");
  cmd_run->add_option("--protocol", protocol_arg, protocol_help);
  cmd_run->add_option("--param", param_args, "protocol parameter key=value (repeatable)");
  cmd_run->add_option("--config", config_path, "JSON run-request file; flags take precedence");
  cmd_run->add_option("--trials", trials_arg, "trial count (sample mode via config)");
  cmd_run->add_option("--seed", seed_arg, "master seed (sample mode via config)");
  cmd_run->add_option("--format", format_arg, "output format: json or csv");

  CLI::App* cmd_sample = app.add_subcommand("sample", "sample trials from a protocol");
  cmd_sample->add_option("--protocol", protocol_arg, protocol_help);
  cmd_sample->add_option("--param", param_args, "protocol parameter key=value (repeatable)");
  cmd_sample->add_option("--config", config_path, "JSON run-request file; flags take precedence");
  cmd_sample->add_option("--trials", trials_arg, "number of trials to draw (default 100000)");
  cmd_sample->add_option("--seed", seed_arg, "master seed (default 0)");
  cmd_sample->add_option("--format", format_arg, "output format: json or csv");

  CLI::App* cmd_sweep = app.add_subcommand("sweep", "evaluate a protocol over a parameter grid");
  cmd_sweep->add_option("--protocol", protocol_arg, protocol_help)->required();
  cmd_sweep->add_option("--sweep-param", sweep_param, "name of the parameter to sweep")
      ->required();
  cmd_sweep->add_option("--grid", grid_text, "comma-separated grid values, in output order")
      ->required();
  cmd_sweep->add_option("--param", param_args, "fixed parameter key=value (repeatable)");
  cmd_sweep->add_option("--format", format_arg, "output format: json or csv");

  CLI::App* cmd_tune = app.add_subcommand("tune", "second-splitter transmission closing the dark port");
  cmd_tune->add_option("--t1", t1_arg, "first-splitter transmission in (0,1)")->required();
  cmd_tune->add_option("--format", format_arg, "output format: json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    RunRequest req;
    if (!config_path.empty()) req = load_config(config_path);

    if (cmd_run->parsed() || cmd_sample->parsed()) {
      if (config_path.empty() && protocol_arg.empty())
        throw ValidationError("--protocol is required (or provide --config)");
      if (!protocol_arg.empty()) req.protocol = protocol_from_name(protocol_arg);
      for (const auto& [name, value] : parse_param_args(param_args)) req.params[name] = value;
      CLI::App* active = cmd_run->parsed() ? cmd_run : cmd_sample;
      if (active->count("--trials") > 0) req.trials = trials_arg;
      if (active->count("--seed") > 0) req.seed = seed_arg;
      if (!format_arg.empty()) req.format = output_format_from_name(format_arg);
      if (cmd_sample->parsed()) req.mode = RunMode::sample;
      std::cout << execute_run(req);
    } else if (cmd_sweep->parsed()) {
      req.protocol = protocol_from_name(protocol_arg);
      req.params = parse_param_args(param_args);
      if (!format_arg.empty()) req.format = output_format_from_name(format_arg);
      std::cout << execute_sweep(req, sweep_param, grid_text);
    } else if (cmd_tune->parsed()) {
      OutputFormat format = OutputFormat::json;
      if (!format_arg.empty()) format = output_format_from_name(format_arg);
      std::cout << execute_tune(t1_arg, format);
    }
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
