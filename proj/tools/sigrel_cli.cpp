// SPDX-License-Identifier: Apache-2.0
// Batch entry point: scenarios, coordinates, axiom suites, the round trip,
// the Tu separation and formula translation. Reports are deterministic JSON;
// exit status is 0 when every check passes, 1 on a failed check and 2 on a
// configuration error.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sigrel/interp.hpp"

namespace {

using namespace sigrel;
using nlohmann::json;

constexpr const char* kSchema = "sigrel-report/1";

struct RunConfig {
  std::string command;
  std::uint64_t seed = 1;
  int samples = 200;
  std::string backend = "approx";
  double eps = kDefaultEps;
  std::string out;
  std::string scenario;
  bool tu = false;
  bool trace = false;
  std::vector<std::string> axioms;
  bool golden = false;
  std::string golden_dir = SIGREL_GOLDEN_DIR;
  std::string spec = "tr";
  std::string input;
  int particles = 3;
  int signals = 5;
  bool witnesses = false;
};

void validate(const RunConfig& c) {
  if (c.samples < 1) throw Error(ErrorKind::ConfigError, "--samples must be at least 1");
  if (!(c.eps > 0)) throw Error(ErrorKind::ConfigError, "--eps must be positive");
  if (c.particles < 0 || c.signals < 0) throw Error(ErrorKind::ConfigError, "scenario counts must be non-negative");
  parse_backend(c.backend);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ConfigError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ConfigError, "malformed JSON in '" + path + "': " + e.what());
  }
}

SignallingModel model_of(const RunConfig& c) { return {parse_backend(c.backend), c.eps, c.tu}; }

json config_json(const RunConfig& c) {
  return {{"seed", c.seed}, {"samples", c.samples}, {"backend", c.backend}, {"eps", c.eps}, {"tu", c.tu}};
}

json report(const RunConfig& c, bool ok, json body) {
  json r = {{"schema", kSchema}, {"command", c.command}, {"config", config_json(c)}, {"ok", ok}};
  for (auto& [k, v] : body.items()) r[k] = std::move(v);
  return r;
}

/// CSV summary of sampled checks: one row per check.
std::string csv_of(const json& checks) {
  std::string s = "check,samples,passes,failures\n";
  for (const auto& c : checks) {
    int samples = c.at("samples").get<int>(), passes = c.at("passes").get<int>();
    s += c.at("axiom").get<std::string>() + "," + std::to_string(samples) + "," + std::to_string(passes) + "," +
         std::to_string(samples - passes) + "\n";
  }
  return s;
}

void emit(const RunConfig& c, const json& r, const std::string& csv = {}) {
  std::string name = c.command;
  std::replace(name.begin(), name.end(), ' ', '-');
  if (c.out.empty()) {
    std::cout << r.dump(2) << "\n";
    return;
  }
  std::filesystem::create_directories(c.out);
  std::ofstream(std::filesystem::path(c.out) / (name + ".json")) << r.dump(2) << "\n";
  if (!csv.empty()) std::ofstream(std::filesystem::path(c.out) / (name + ".csv")) << csv;
  std::cout << name << ": " << (r.at("ok").get<bool>() ? "ok" : "FAILED") << "\n";
}

// ---------------------------------------------------------------------------
// Commands

/// Input: {"field": ..., "frame": {a, o, u, ax, ay, az}?, "events": [[t,x,y,z], ...]}.
/// Without a frame the standard frame of the time axis with unit 1 is used.
int coordinatize(const RunConfig& c) {
  if (c.scenario.empty()) throw Error(ErrorKind::ConfigError, "coordinatize needs --scenario FILE");
  json in = read_json(c.scenario);
  Backend b = parse_backend(in.value("field", c.backend));
  auto read_frame = [&]() -> Frame {
    try {
      if (!in.contains("frame")) {
        Scalar z = Scalar(0).to(b);
        return standard_frame(Particle::time_axis(b), {z, z, z, z}, Scalar(1).to(b));
      }
      const json& j = in.at("frame");
      return {particle_from_json(j.at("a"), b, c.eps),  event_from_json(j.at("o"), b, c.eps),
              event_from_json(j.at("u"), b, c.eps),     particle_from_json(j.at("ax"), b, c.eps),
              particle_from_json(j.at("ay"), b, c.eps), particle_from_json(j.at("az"), b, c.eps)};
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ConfigError, std::string("malformed frame: ") + e.what());
    }
  };
  Frame f = read_frame();
  if (!frame_validate(f)) throw Error(ErrorKind::InvalidFrame, "the frame parameters do not form a coordinate system");
  json rows = json::array();
  bool ok = true;
  for (const auto& je : in.at("events")) {
    Event e = event_from_json(je, b, c.eps);
    Trace tr = json::object();
    json row = {{"event", to_json(e)}};
    try {
      auto v = cord_values(f, e, c.trace ? &tr : nullptr);
      auto oracle = poincare_to_frame(f, e);
      row["coords"] = {v[0].str(), v[1].str(), v[2].str(), v[3].str()};
      row["matches_lorentz"] = v == oracle;
      ok = ok && v == oracle;
      if (c.trace) row["trace"] = tr;
    } catch (const Error& err) {
      row["error"] = err.what();
      ok = false;
    }
    rows.push_back(row);
  }
  emit(c, report(c, ok, {{"frame", to_json(f)}, {"events", rows}}));
  return ok ? 0 : 1;
}

int check_axioms(const RunConfig& c) {
  std::vector<std::string> names = c.axioms.empty() ? axiom_names() : c.axioms;
  SpecRelModel m{model_of(c)};
  json checks = json::array();
  bool ok = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    AxiomReport r = check_axiom(m, names[i], c.samples, c.seed + i);
    ok = ok && r.ok();
    checks.push_back(to_json(r));
  }
  emit(c, report(c, ok, {{"checks", checks}}), csv_of(checks));
  return ok ? 0 : 1;
}

int roundtrip(const RunConfig& c) {
  interp::SuiteReport r = interp::roundtrip_check(model_of(c), c.samples, c.seed);
  json j = interp::to_json(r);
  emit(c, report(c, r.ok(), {{"checks", j.at("checks")}}), csv_of(j.at("checks")));
  return r.ok() ? 0 : 1;
}

int tu_separation(const RunConfig& c) {
  interp::SuiteReport r = interp::tu_separation(c.seed, c.samples, parse_backend(c.backend));
  interp::BridgeReport bridge = interp::axsym_bridge_check(c.samples, c.seed, parse_backend(c.backend));
  json j = interp::to_json(r);
  bool ok = r.ok() && bridge.ok();
  emit(c, report(c, ok, {{"checks", j.at("checks")}, {"axsym_bridge", interp::to_json(bridge)}}), csv_of(j.at("checks")));
  return ok ? 0 : 1;
}

folkit::InterpretationSpec spec_named(const std::string& name) {
  if (name == "tr") return interp::tr_spec();
  if (name == "Tr") return interp::Tr_spec();
  if (name == "lines") return folkit::lines_spec();
  return folkit::spec_from_json(read_json(name));
}

/// With --golden, compares every stored golden set. Otherwise translates
/// the formulas of the input file, one per line; blank lines and lines
/// starting with ';' are skipped.
int translate(const RunConfig& c) {
  if (c.golden) {
    json sets = json::array();
    bool ok = true;
    for (const auto& name : interp::golden_names()) {
      std::string actual = interp::render(interp::golden_set(name));
      std::string path = (std::filesystem::path(c.golden_dir) / (name + ".txt")).string();
      auto diff = interp::golden_diff(read_file(path), actual);
      ok = ok && diff.empty();
      sets.push_back({{"set", name}, {"diffs", diff}});
    }
    emit(c, report(c, ok, {{"golden", sets}}));
    return ok ? 0 : 1;
  }
  if (c.input.empty()) throw Error(ErrorKind::ConfigError, "translate needs a formula file or --golden");
  folkit::InterpretationSpec spec = spec_named(c.spec);
  std::istringstream lines(read_file(c.input));
  std::string line;
  json out = json::array();
  while (std::getline(lines, line)) {
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == ';') continue;
    folkit::Formula f = folkit::parse(line, spec.source);
    folkit::Formula t = folkit::translate(spec, f);
    out.push_back({{"source", folkit::to_text(f)}, {"translation", folkit::to_text(t)}, {"sexpr", folkit::to_sexpr(t)}});
  }
  emit(c, report(c, true, {{"spec", spec.name}, {"formulas", out}}));
  return 0;
}

int scenario_gen(const RunConfig& c) {
  Scenario sc = scenario_restrict(c.seed, {c.particles, c.signals}, model_of(c), c.witnesses);
  bool ok = true;
  for (const auto& p : sc.particles) ok = ok && p.velocity().norm2() < Scalar(1);
  for (const auto& s : sc.signals) ok = ok && interval2(s.beg(), s.end()).is_zero();
  emit(c, report(c, ok, {{"scenario", to_json(sc)}}));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Signalling theory and SpecRel executable model"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  auto common = [&](CLI::App* s) {
    s->add_option("--seed", c.seed, "Random seed");
    s->add_option("--samples", c.samples, "Samples per check");
    s->add_option("--backend", c.backend, "Field backend")->check(CLI::IsMember({"exact", "approx"}));
    s->add_option("--eps", c.eps, "Tolerance of the approximate backend");
    s->add_option("--out", c.out, "Directory for report files (default: stdout)");
    s->add_flag("--tu", c.tu, "Use the expanded model M(F)+");
  };

  auto* coord = app.add_subcommand("coordinatize", "Coordinates of events in a frame, checked against Lorentz");
  common(coord);
  coord->add_option("--scenario", c.scenario, "JSON file with a frame and an event list")->required();
  coord->add_flag("--trace", c.trace, "Include witness traces");

  auto* axioms = app.add_subcommand("check-axioms", "Sampled SpecRel axiom checks over tr(M)");
  common(axioms);
  axioms->add_option("--axiom", c.axioms, "Axiom to check (repeatable; default: all)");

  auto* rt = app.add_subcommand("roundtrip", "Round trip between the two interpretations");
  common(rt);

  auto* tu = app.add_subcommand("tu-separation", "Dilation witness separating SigTh+ from SigTh");
  common(tu);

  auto* tr = app.add_subcommand("translate", "Translate formulas or compare the golden sets");
  common(tr);
  tr->add_flag("--golden", c.golden, "Compare the stored golden translations");
  tr->add_option("--golden-dir", c.golden_dir, "Directory of the golden files");
  tr->add_option("--spec", c.spec, "tr, Tr, lines, or an interpretation JSON file");
  tr->add_option("input", c.input, "Formula file, one s-expression per line");

  auto* scen = app.add_subcommand("scenario", "Scenario tools");
  scen->require_subcommand(1);
  auto* gen = scen->add_subcommand("gen", "Generate a deterministic scenario");
  common(gen);
  gen->add_option("--particles", c.particles, "Particle count");
  gen->add_option("--signals", c.signals, "Signal count");
  gen->add_flag("--witnesses", c.witnesses, "Add rest particles and events at signal endpoints");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    validate(c);
    if (*coord) return c.command = "coordinatize", coordinatize(c);
    if (*axioms) return c.command = "check-axioms", check_axioms(c);
    if (*rt) return c.command = "roundtrip", roundtrip(c);
    if (*tu) return c.command = "tu-separation", tu_separation(c);
    if (*tr) return c.command = "translate", translate(c);
    if (*gen) return c.command = "scenario gen", scenario_gen(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ConfigError || e.kind() == ErrorKind::SyntaxError || e.kind() == ErrorKind::SortError ||
                   e.kind() == ErrorKind::UnknownAxiom || e.kind() == ErrorKind::InvalidFrame
               ? 2
               : 1;
  }
  return 2;
}
