#include "elicit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "elicit/consistency.hpp"
#include "elicit/osband.hpp"
#include "elicit/parallel.hpp"
#include "elicit/path_cert.hpp"

namespace elicit::cli {
namespace {

const char* kUsage = R"(usage: elicit <command> [--config FILE] [--key value ...]

commands:
  functional      evaluate the target functional T on a distribution
  score           pointwise score (--x, --y) or expected score (--x, --dist)
  counterexample  the five headline numbers of the cone counterexample
  path            construct and verify an action-domain path (--x, --t)
  certify         sample-based certification of the path condition
  wsweep          certification verdicts across the {x2 > W x1} cone family
  consistency     numerical consistency check over a distribution family
  figure1         emit the bound curves and the expected-score grid (CSV)
  osband          identification diagnostics: recover_h | psd | path_integral |
                  pointwise

common keys (every flag can also be set in the config file; flags win):
  alpha | q, p        functional levels and weights
  dist, dists         distribution spec(s): point:c | normal:mu,sigma |
                      discrete:y@w,... | mix:w*spec+...
  g1..g7, gk, a       score functions: zero | linear:a,b | exp | neg_log_neg |
                      power:beta   (or score_preset=counterexample_cone |
                      var_es_log)
  domain              full:k | A0 | A0_plus | A0_minus | half_strip | band:c |
                      cone_counterexample | wcone:W | custom (k=, constraints=)
  seed, samples, box, grid, tol, threads, out, expect, exec
)";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid number for " + what + ": '" + s + "'");
  }
}

}  // namespace

RunConfig RunConfig::from_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line is not key=value: '" + line + "'");
    }
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

void RunConfig::set(const std::string& key, const std::string& value) {
  kv_[key] = value;
}

bool RunConfig::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string RunConfig::get_str(const std::string& key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) throw ConfigError("missing required key: " + key);
  return it->second;
}

std::string RunConfig::get_str(const std::string& key,
                               const std::string& def) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? def : it->second;
}

double RunConfig::get_double(const std::string& key) const {
  return to_double(get_str(key), key);
}

double RunConfig::get_double(const std::string& key, double def) const {
  return has(key) ? get_double(key) : def;
}

int RunConfig::get_int(const std::string& key, int def) const {
  if (!has(key)) return def;
  const double v = get_double(key);
  return static_cast<int>(v);
}

Vec RunConfig::get_vec(const std::string& key) const {
  Vec out;
  for (const auto& part : split(get_str(key), ',')) {
    out.push_back(to_double(trim(part), key));
  }
  return out;
}

std::string RunConfig::serialize() const {
  std::string s;
  for (const auto& [k, v] : kv_) s += k + "=" + v + "\n";
  return s;
}

Distribution parse_distribution(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = trim(spec.substr(0, colon));
  const std::string args =
      colon == std::string::npos ? "" : trim(spec.substr(colon + 1));
  if (kind == "point") return Distribution::point_mass(to_double(args, "point"));
  if (kind == "normal") {
    const auto parts = split(args, ',');
    if (parts.size() != 2) throw ConfigError("normal needs mu,sigma");
    return Distribution::normal(to_double(trim(parts[0]), "mu"),
                                to_double(trim(parts[1]), "sigma"));
  }
  if (kind == "discrete") {
    Vec atoms, weights;
    for (const auto& part : split(args, ',')) {
      const auto at = part.find('@');
      if (at == std::string::npos) {
        throw ConfigError("discrete atoms use y@w: '" + part + "'");
      }
      atoms.push_back(to_double(trim(part.substr(0, at)), "atom"));
      weights.push_back(to_double(trim(part.substr(at + 1)), "weight"));
    }
    return Distribution::discrete(std::move(atoms), std::move(weights));
  }
  if (kind == "mix") {
    Vec weights;
    std::vector<Distribution> comps;
    for (const auto& part : split(args, '+')) {
      const auto star = part.find('*');
      if (star == std::string::npos) {
        throw ConfigError("mixture components use w*spec: '" + part + "'");
      }
      weights.push_back(to_double(trim(part.substr(0, star)), "mix weight"));
      comps.push_back(parse_distribution(trim(part.substr(star + 1))));
    }
    return Distribution::mixture(std::move(weights), std::move(comps));
  }
  throw ConfigError("unknown distribution kind: '" + kind + "'");
}

std::vector<Distribution> parse_distribution_list(const std::string& spec) {
  std::vector<Distribution> out;
  for (const auto& part : split(spec, ';')) {
    const std::string p = trim(part);
    if (!p.empty()) out.push_back(parse_distribution(p));
  }
  if (out.empty()) throw ConfigError("empty distribution list");
  return out;
}

FunctionalSpec parse_functional(const RunConfig& cfg) {
  if (cfg.has("q")) {
    const bool normalized = cfg.get_int("normalized", 1) != 0;
    return FunctionalSpec::make(cfg.get_vec("q"), cfg.get_vec("p"), normalized);
  }
  return FunctionalSpec::var_es(cfg.get_double("alpha", 0.05));
}

ScoreSpec parse_score(const RunConfig& cfg) {
  const FunctionalSpec fun = parse_functional(cfg);
  if (cfg.has("score_preset")) {
    const std::string preset = cfg.get_str("score_preset");
    const double alpha = fun.levels[0];
    if (preset == "counterexample_cone") {
      return ScoreSpec::counterexample_cone(alpha);
    }
    if (preset == "var_es_log") return ScoreSpec::var_es_log(alpha);
    throw ConfigError("unknown score_preset: " + preset);
  }
  ScoreSpec s;
  s.functional = fun;
  for (int r = 1; r < fun.k(); ++r) {
    s.g.push_back(ScoreFn::from_tag(cfg.get_str("g" + std::to_string(r))));
  }
  s.gk = ScoreFn::from_tag(cfg.get_str("gk"));
  if (cfg.has("a")) s.offset = ScoreFn::from_tag(cfg.get_str("a"));
  s.validate();
  return s;
}

Domain parse_domain(const RunConfig& cfg, const FunctionalSpec& functional) {
  const std::string spec = cfg.get_str("domain");
  const auto colon = spec.find(':');
  const std::string name = trim(spec.substr(0, colon));
  const std::string args =
      colon == std::string::npos ? "" : trim(spec.substr(colon + 1));
  if (name == "full") {
    return Domain::full(args.empty() ? functional.k()
                                     : static_cast<int>(to_double(args, "k")));
  }
  if (name == "A0") return Domain::a0(functional);
  if (name == "A0_plus") return Domain::a0_plus(functional);
  if (name == "A0_minus") return Domain::a0_minus(functional);
  if (name == "half_strip") return Domain::half_strip();
  if (name == "A0_half_strip") {
    return Domain::a0(functional).intersect(Domain::half_strip());
  }
  if (name == "band") return Domain::band(to_double(args, "band width"));
  if (name == "cone_counterexample") return Domain::cone_counterexample();
  if (name == "wcone") return Domain::w_cone(to_double(args, "W"));
  if (name == "custom") {
    const int k = cfg.get_int("k", functional.k());
    std::vector<Constraint> cs;
    for (const auto& row : split(cfg.get_str("constraints"), ';')) {
      const auto parts = split(trim(row), ',');
      if (static_cast<int>(parts.size()) != k + 2) {
        throw ConfigError("constraint rows use a1,..,ak,rel,b");
      }
      Constraint c;
      for (int i = 0; i < k; ++i) {
        c.normal.push_back(to_double(trim(parts[i]), "constraint"));
      }
      const std::string rel = trim(parts[k]);
      if (rel == "le") {
        c.rel = Relation::LessEqual;
      } else if (rel == "lt") {
        c.rel = Relation::LessThan;
      } else {
        throw ConfigError("constraint relation must be le or lt");
      }
      c.bound = to_double(trim(parts[k + 1]), "constraint bound");
      cs.push_back(std::move(c));
    }
    return Domain(k, std::move(cs));
  }
  throw ConfigError("unknown domain: " + spec);
}

namespace {

Box parse_box(const RunConfig& cfg, int k, const Box& fallback) {
  if (!cfg.has("box")) return fallback;
  const Vec v = cfg.get_vec("box");
  if (v.size() == 2) return Box::cube(k, v[0], v[1]);
  if (static_cast<int>(v.size()) == 2 * k) {
    Box b;
    for (int i = 0; i < k; ++i) {
      b.lo.push_back(v[2 * i]);
      b.hi.push_back(v[2 * i + 1]);
    }
    return b;
  }
  throw ConfigError("box needs lo,hi or lo1,hi1,..,lok,hik");
}

Exec parse_exec(const RunConfig& cfg) {
  const std::string e = cfg.get_str("exec", "parallel");
  if (e == "serial") return Exec::Serial;
  if (e == "parallel") return Exec::Parallel;
  throw ConfigError("exec must be serial or parallel");
}

void emit(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.has("out")) {
    std::ofstream f(cfg.get_str("out"), std::ios::binary);
    if (!f) throw ConfigError("cannot write " + cfg.get_str("out"));
    f << payload;
  } else {
    out << payload;
  }
}

int check_expectation(const RunConfig& cfg, const std::string& actual,
                      std::ostream& err) {
  if (!cfg.has("expect")) return 0;
  if (cfg.get_str("expect") == actual) return 0;
  err << "expectation failed: wanted '" << cfg.get_str("expect")
      << "', got '" << actual << "'\n";
  return 1;
}

PathPolyline parse_polyline(const std::string& spec) {
  PathPolyline path;
  for (const auto& part : split(spec, ';')) {
    Vec v;
    for (const auto& coord : split(trim(part), ',')) {
      v.push_back(to_double(trim(coord), "path vertex"));
    }
    path.vertices.push_back(std::move(v));
  }
  if (path.vertices.size() < 2) {
    throw ConfigError("path needs at least two vertices: x1,..;y1,..");
  }
  return path;
}

int cmd_functional(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const FunctionalSpec fun = parse_functional(cfg);
  const Distribution d = parse_distribution(cfg.get_str("dist"));
  out << fmt12(evaluate_T(fun, d)) << "\n";
  return 0;
}

int cmd_score(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const ScoreSpec score = parse_score(cfg);
  const Vec x = cfg.get_vec("x");
  if (cfg.has("dist")) {
    const Distribution d = parse_distribution(cfg.get_str("dist"));
    out << fmt12(expected_score(score, x, d, cfg.get_double("tol", 1e-9)))
        << "\n";
  } else {
    out << fmt12(eval_score(score, x, cfg.get_double("y"))) << "\n";
  }
  return 0;
}

int cmd_counterexample(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const double alpha = cfg.get_double("alpha", 0.05);
  const CounterexampleValues v = reproduce_counterexample(alpha);
  std::string payload;
  payload += "score_at_origin_pointmass=" + fmt12(v.score_at_t_pointmass) + "\n";
  payload += "score_at_alt_pointmass=" + fmt12(v.score_at_alt_pointmass) + "\n";
  payload += "t_normal=" + fmt12(v.t_normal) + "\n";
  payload += "expected_at_t=" + fmt12(v.expected_at_t) + "\n";
  payload += "expected_at_alt=" + fmt12(v.expected_at_alt) + "\n";
  emit(cfg, payload, out);
  return 0;
}

int cmd_path(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FunctionalSpec fun = parse_functional(cfg);
  const Domain dom = parse_domain(cfg, fun);
  const Vec x = cfg.get_vec("x");
  const Vec t = cfg.get_vec("t");
  const PathOutcome po =
      construct_path(dom, fun, x, t, cfg.get_int("max_sweeps", 64));
  std::string payload;
  if (po.ok) {
    payload += "status=ok\nN=" + std::to_string(po.seq.n_steps()) + "\n";
    for (const auto& z : po.seq.points) payload += fmt12(z) + "\n";
    const PathChecks checks = verify_path(dom, fun, po.seq, x, t);
    payload += std::string("verified=") + (checks.all() ? "pass" : "fail") +
               "\n";
    emit(cfg, payload, out);
    return checks.all() ? 0 : 1;
  }
  payload += "status=failed\nreason=" + po.failure.reason + "\n";
  payload += "stall_point=" + fmt12(po.failure.stall_point) + "\n";
  emit(cfg, payload, out);
  err << "no path found: " << po.failure.reason << "\n";
  return 1;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FunctionalSpec fun = parse_functional(cfg);
  const Domain dom = parse_domain(cfg, fun);
  SamplerConfig sampler;
  sampler.seed = static_cast<std::uint64_t>(cfg.get_int("seed", 1));
  sampler.x_box = cfg.get_double("x_box", cfg.get_double("box_radius", 10.0));
  sampler.t_box = cfg.get_double("t_box", cfg.get_double("box_radius", 10.0));
  sampler.max_sweeps = cfg.get_int("max_sweeps", sampler.max_sweeps);
  const CertReport rep = certify_domain(dom, fun, sampler,
                                        cfg.get_int("samples", 500),
                                        parse_exec(cfg));
  emit(cfg, rep.to_json() + "\n", out);
  return check_expectation(cfg, to_string(rep.verdict), err);
}

int cmd_wsweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const double alpha = cfg.get_double("alpha", 0.05);
  Vec ws{-25, -19, -10, -1, 0, 0.5, 1, 2};
  if (cfg.has("W")) ws = cfg.get_vec("W");
  SamplerConfig sampler = w_sweep_sampler();
  sampler.seed = static_cast<std::uint64_t>(cfg.get_int("seed", 1));
  if (cfg.has("x_box")) sampler.x_box = cfg.get_double("x_box");
  sampler.max_sweeps = cfg.get_int("max_sweeps", sampler.max_sweeps);
  const auto rows =
      w_sweep(alpha, ws, cfg.get_int("samples", 200), sampler, parse_exec(cfg));
  std::string payload = "W,verdict\n";
  std::string verdicts;
  for (const auto& row : rows) {
    payload += fmt12(row.w) + "," + to_string(row.verdict) + "\n";
    if (!verdicts.empty()) verdicts += ",";
    verdicts += to_string(row.verdict);
  }
  emit(cfg, payload, out);
  return check_expectation(cfg, verdicts, err);
}

int cmd_consistency(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ScoreSpec score = parse_score(cfg);
  const Domain dom = parse_domain(cfg, score.functional);
  const auto dists = parse_distribution_list(cfg.get_str("dists"));
  ConsistencyConfig cc;
  cc.box_radius = cfg.get_double("box_radius", 8.0);
  cc.resolution = cfg.get_int("grid", 33);
  cc.gap_tol = cfg.get_double("gap_tol", 1e-7);
  cc.loc_tol = cfg.get_double("loc_tol", 1e-3);
  cc.quad_tol = cfg.get_double("tol", 1e-9);
  cc.exec = parse_exec(cfg);
  if (cfg.has("box")) cc.box = parse_box(cfg, score.k(), {});
  const ConsistencyReport rep = check_consistency(score, dom, dists, cc);
  emit(cfg, rep.to_json() + "\n", out);
  return check_expectation(
      cfg, rep.consistent ? "consistent" : "inconsistent", err);
}

int cmd_figure1(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const ScoreSpec score = parse_score(cfg);
  const Distribution d = parse_distribution(cfg.get_str("dist"));
  const Vec t = evaluate_T(score.functional, d);
  const Box box = parse_box(cfg, 2, Box::around(t, 3.0));
  const Figure1Data data =
      figure1_grid(score, d, box, cfg.get_int("grid", 101), parse_exec(cfg));
  if (cfg.has("out")) {
    const std::string prefix = cfg.get_str("out");
    std::ofstream curves(prefix + "_curves.csv", std::ios::binary);
    std::ofstream grid(prefix + "_grid.csv", std::ios::binary);
    if (!curves || !grid) throw ConfigError("cannot write " + prefix + "_*");
    curves << data.curves_csv();
    grid << data.grid_csv();
  } else {
    out << "# curves\n" << data.curves_csv() << "# grid\n" << data.grid_csv();
  }
  return 0;
}

int cmd_osband(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const ScoreSpec score = parse_score(cfg);
  const std::string op = cfg.get_str("op", "recover_h");
  if (op == "recover_h") {
    const Vec x = cfg.get_vec("x");
    const auto dists = parse_distribution_list(cfg.get_str("dists"));
    const HMatrix h =
        recover_h(score, x, dists, cfg.get_double("fd_step", 1e-5));
    std::string payload = "h=[";
    for (int r = 0; r < h.h.n; ++r) {
      if (r) payload += ";";
      for (int c = 0; c < h.h.n; ++c) {
        if (c) payload += ",";
        payload += fmt12(h.h.at(r, c));
      }
    }
    payload += "]\ncond=" + fmt12(h.condition) + "\n";
    emit(cfg, payload, out);
    return 0;
  }
  if (op == "path_integral" || op == "pointwise") {
    const PathPolyline path = parse_polyline(cfg.get_str("path"));
    PathIntegralOptions options;
    options.h_source = cfg.get_str("h_source", "analytic") == "recovered"
                           ? HSource::Recovered
                           : HSource::Analytic;
    if (options.h_source == HSource::Recovered) {
      options.probe_dists = parse_distribution_list(cfg.get_str("dists"));
    }
    double value;
    if (op == "path_integral") {
      const Distribution d = parse_distribution(cfg.get_str("dist"));
      value = path_integral_diff(score, score.functional, path, d, options);
    } else {
      value = pointwise_path_diff(score, score.functional, path,
                                  cfg.get_double("y"), options);
    }
    emit(cfg, fmt12(value) + "\n", out);
    return 0;
  }
  if (op == "psd") {
    const Domain dom = parse_domain(cfg, score.functional);
    const auto dists = parse_distribution_list(cfg.get_str("dists"));
    const Box box = parse_box(cfg, score.k(), Box::cube(score.k(), -4, 4));
    const int res = cfg.get_int("grid", 15);
    const PsdReport rep =
        psd_scan(score, dom, box, std::vector<int>(score.k(), res), dists,
                 cfg.get_double("positivity_tol", 1e-8), parse_exec(cfg));
    emit(cfg, rep.to_json() + "\n", out);
    return 0;
  }
  throw ConfigError("unknown osband op: " + op);
}

}  // namespace

namespace {

const std::map<std::string, std::vector<std::string>>& allowed_keys() {
  static const std::vector<std::string> functional_keys{
      "alpha", "q", "p", "normalized"};
  static const std::vector<std::string> score_keys{
      "score_preset", "g1", "g2", "g3", "g4", "g5", "g6", "g7", "gk", "a"};
  static const std::vector<std::string> domain_keys{"domain", "k",
                                                    "constraints"};
  auto join = [](std::initializer_list<std::vector<std::string>> groups,
                 std::vector<std::string> extra) {
    std::vector<std::string> all{"config", "threads", "out", "seed",
                                 "tol",    "exec",    "expect"};
    for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
    all.insert(all.end(), extra.begin(), extra.end());
    return all;
  };
  static const std::map<std::string, std::vector<std::string>> keys{
      {"functional", join({functional_keys}, {"dist"})},
      {"score", join({functional_keys, score_keys}, {"x", "y", "dist"})},
      {"counterexample", join({functional_keys}, {})},
      {"path", join({functional_keys, domain_keys}, {"x", "t", "max_sweeps"})},
      {"certify", join({functional_keys, domain_keys},
                       {"samples", "x_box", "t_box", "box_radius",
                        "max_sweeps"})},
      {"wsweep", join({functional_keys}, {"W", "samples", "x_box",
                                          "max_sweeps"})},
      {"consistency", join({functional_keys, score_keys, domain_keys},
                           {"dists", "box", "box_radius", "grid", "gap_tol",
                            "loc_tol"})},
      {"figure1", join({functional_keys, score_keys}, {"dist", "box", "grid"})},
      {"osband", join({functional_keys, score_keys, domain_keys},
                      {"op", "x", "y", "dist", "dists", "fd_step", "h_source",
                       "path", "box", "grid", "positivity_tol"})},
  };
  return keys;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  if (args.empty() || args[0] == "-h" || args[0] == "--help" ||
      args[0] == "help") {
    out << kUsage;
    return args.empty() ? 2 : 0;
  }
  const std::string command = args[0];
  RunConfig cfg;
  try {
    // Flags are collected first so --config is honored before overrides.
    std::vector<std::pair<std::string, std::string>> flags;
    for (std::size_t i = 1; i < args.size(); ++i) {
      std::string key = args[i];
      if (key.rfind("--", 0) != 0) {
        throw ConfigError("expected --key, got '" + key + "'");
      }
      key = key.substr(2);
      std::string value;
      const auto eq = key.find('=');
      if (eq != std::string::npos) {
        value = key.substr(eq + 1);
        key = key.substr(0, eq);
      } else {
        if (i + 1 >= args.size()) {
          throw ConfigError("flag --" + key + " needs a value");
        }
        value = args[++i];
      }
      flags.emplace_back(key, value);
    }
    const auto known = allowed_keys().find(command);
    if (known != allowed_keys().end()) {
      for (const auto& [k, v] : flags) {
        if (std::find(known->second.begin(), known->second.end(), k) ==
            known->second.end()) {
          err << "unknown flag for '" << command << "': --" << k << "\n"
              << kUsage;
          return 2;
        }
      }
    }
    for (const auto& [k, v] : flags) {
      if (k == "config") cfg = RunConfig::from_file(v);
    }
    for (const auto& [k, v] : flags) {
      if (k != "config") cfg.set(k, v);
    }
    if (cfg.has("threads")) set_thread_cap(cfg.get_int("threads", 0));

    if (command == "functional") return cmd_functional(cfg, out, err);
    if (command == "score") return cmd_score(cfg, out, err);
    if (command == "counterexample") return cmd_counterexample(cfg, out, err);
    if (command == "path") return cmd_path(cfg, out, err);
    if (command == "certify") return cmd_certify(cfg, out, err);
    if (command == "wsweep") return cmd_wsweep(cfg, out, err);
    if (command == "consistency") return cmd_consistency(cfg, out, err);
    if (command == "figure1") return cmd_figure1(cfg, out, err);
    if (command == "osband") return cmd_osband(cfg, out, err);
    err << "unknown command: " << command << "\n" << kUsage;
    return 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace elicit::cli
