#include "cli.hpp"

#include "soldyn/autdyn.hpp"
#include "soldyn/cyclo.hpp"
#include "soldyn/ergfind.hpp"
#include "soldyn/examples.hpp"
#include "soldyn/exactlin.hpp"
#include "soldyn/groupdyn.hpp"
#include "soldyn/simulate.hpp"

#include "CLI11.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace soldyn::cli {

#ifndef SOLDYN_VERSION
#define SOLDYN_VERSION "0.0.0"
#endif

std::string_view tool_version() { return SOLDYN_VERSION; }

namespace {

std::shared_ptr<spdlog::logger> logger() {
  static std::once_flag once;
  std::call_once(once, [] {
    auto log = spdlog::get("soldyn");
    if (!log) log = spdlog::stderr_color_mt("soldyn");
    const char* env = std::getenv("SOLDYN_LOG");
    log->set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
  });
  return spdlog::get("soldyn");
}

json tool_json() { return {{"name", "soldyn"}, {"version", std::string(tool_version())}}; }

json base_report(std::string_view command, const InputDoc& doc) {
  json r;
  r["command"] = command;
  r["tool"] = tool_json();
  r["dimension"] = doc.dimension;
  r["mode"] = std::string(to_string(doc.mode));
  return r;
}

json optional_json(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

CommandResult failure(int code, std::string message) {
  CommandResult res;
  res.exit_code = code;
  res.error = std::move(message);
  return res;
}

// Builds the GenSet, mapping validation failures to exit code 3.
std::optional<GenSet> build_genset(const InputDoc& doc, CommandResult& res) {
  for (std::size_t i = 0; i < doc.generators.size(); ++i) {
    const RatMatrix& m = doc.generators[i];
    if (!m.is_invertible()) {
      res = failure(exit_invalid_matrix, "generator " + std::to_string(i + 1) + " is singular");
      return std::nullopt;
    }
    if (doc.mode == Mode::torus && !torus_validate(m)) {
      res = failure(exit_invalid_matrix,
                    "generator " + std::to_string(i + 1) + " is not a unimodular integer matrix (torus mode)");
      return std::nullopt;
    }
  }
  return GenSet(doc.dimension, doc.mode, doc.generators, doc.labels);
}

std::string basis_text(const Subspace& s) {
  if (s.is_zero()) return "{0}";
  if (s.is_full()) return "Q^" + std::to_string(s.ambient_dim());
  return to_string(s);
}

json series_json(const SeriesReport& s) {
  json chain = json::array();
  for (const auto& sub : s.chain) chain.push_back(to_json(sub));
  json layers = json::array();
  for (const auto& layer : s.layers) {
    if (const auto* f = std::get_if<FiniteAction>(&layer)) {
      layers.push_back({{"kind", "finite"}, {"order", f->order}});
    } else {
      const auto& st = std::get<Stalled>(layer);
      layers.push_back({{"kind", "stalled"}, {"base", to_json(st.base)}, {"quotient_dim", st.quotient_dim}});
    }
  }
  return {{"chain", chain}, {"layers", layers}, {"length", s.finite_layers()}, {"stalled", s.stalled()}};
}

std::string series_text(const SeriesReport& s) {
  std::ostringstream out;
  out << "series (" << s.finite_layers() << " finite layer" << (s.finite_layers() == 1 ? "" : "s")
      << (s.stalled() ? ", stalled" : "") << "):\n";
  for (std::size_t i = 0; i < s.chain.size(); ++i) {
    out << "  S_" << i << " dim " << s.chain[i].dim() << "  " << basis_text(s.chain[i]) << "\n";
  }
  for (std::size_t i = 0; i < s.layers.size(); ++i) {
    if (const auto* f = std::get_if<FiniteAction>(&s.layers[i])) {
      out << "  layer " << i + 1 << ": finite action of order " << f->order << "\n";
    } else {
      const auto& st = std::get<Stalled>(s.layers[i]);
      out << "  stalled: quotient of dim " << st.quotient_dim << " has no finite-orbit character\n";
    }
  }
  return out.str();
}

json split_json(const SplitReport& split) {
  json chain = json::array();
  for (const auto& s : split.chain) chain.push_back(to_json(s));
  return {{"chain", chain}, {"distal_part", to_json(split.distal_part())}, {"ergodic_part_dim", split.ergodic_part_dim}};
}

std::string split_text(const SplitReport& split) {
  std::ostringstream out;
  out << "split: distal part dim " << split.distal_part().dim() << ", ergodic quotient dim " << split.ergodic_part_dim
      << "\n";
  for (std::size_t i = 0; i < split.chain.size(); ++i)
    out << "  V_" << i + 1 << " dim " << split.chain[i].dim() << "  " << basis_text(split.chain[i]) << "\n";
  return out.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::optional<CommandResult> require_single_generator(const InputDoc& doc, std::string_view command) {
  if (doc.generators.size() == 1) return std::nullopt;
  return failure(exit_parse, std::string(command) + " expects exactly one generator, got " +
                                 std::to_string(doc.generators.size()));
}

}  // namespace

// ---- JSON conversions -------------------------------------------------------

json to_json(const Rat& q) { return to_string(q); }

json to_json(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json to_json(const RatMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(to_json(b));
  return {{"dim", s.dim()}, {"basis", basis}};
}

json to_json(const GenSet& g, const Word& w) {
  return {{"word", to_string(g, w)}, {"letters", w.letters}, {"matrix", to_json(w.matrix)}};
}

QVec qvec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rational strings");
  QVec v;
  v.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError("rationals must be JSON strings, got " + x.dump());
    try {
      v.push_back(parse_rat(x.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return v;
}

RatMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("a matrix must be a nonempty array of rows");
  std::vector<QVec> rows;
  for (const auto& row : j) rows.push_back(qvec_from_json(row));
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ParseError("matrix rows have different lengths");
  return RatMatrix::from_rows(rows, cols);
}

InputDoc parse_input(const json& doc) {
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "dimension" && key != "mode" && key != "generators" && key != "labels")
      throw ParseError("unknown key '" + key + "'");
  }
  InputDoc out;
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    throw ParseError("'dimension' must be an integer");
  const auto dim = doc["dimension"].get<long long>();
  if (dim <= 0) throw ParseError("'dimension' must be positive");
  out.dimension = static_cast<std::size_t>(dim);

  if (!doc.contains("mode") || !doc["mode"].is_string()) throw ParseError("'mode' must be \"torus\" or \"solenoid\"");
  try {
    out.mode = parse_mode(doc["mode"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }

  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
    throw ParseError("'generators' must be a nonempty array of matrices");
  for (const auto& g : doc["generators"]) {
    RatMatrix m = matrix_from_json(g);
    if (m.rows() != out.dimension || m.cols() != out.dimension) {
      throw ParseError("generator " + std::to_string(out.generators.size() + 1) + " is not " +
                       std::to_string(out.dimension) + "x" + std::to_string(out.dimension));
    }
    out.generators.push_back(std::move(m));
  }

  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    if (!labels.is_array()) throw ParseError("'labels' must be an array of strings");
    for (const auto& l : labels) {
      if (!l.is_string()) throw ParseError("'labels' must be an array of strings");
      out.labels.push_back(l.get<std::string>());
    }
    if (out.labels.size() != out.generators.size()) throw ParseError("'labels' must match the number of generators");
  }
  return out;
}

InputDoc parse_input_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_input(doc);
}

json render_input(const InputDoc& doc) {
  json gens = json::array();
  for (const auto& m : doc.generators) gens.push_back(to_json(m));
  json out = {{"dimension", doc.dimension}, {"mode", std::string(to_string(doc.mode))}, {"generators", gens}};
  if (!doc.labels.empty()) out["labels"] = doc.labels;
  return out;
}

InputDoc input_from_genset(const GenSet& g) {
  InputDoc doc;
  doc.dimension = g.dim();
  doc.mode = g.mode();
  doc.generators = g.gens();
  doc.labels = g.labels();
  return doc;
}

json caps_to_json(const Caps& caps) {
  json j = {{"word_cap", caps.word_cap}, {"power_cap", caps.power_cap}};
  j["class_cap"] = caps.class_cap ? json(*caps.class_cap) : json(nullptr);
  j["orbit_cap"] = caps.orbit_cap ? json(*caps.orbit_cap) : json(nullptr);
  return j;
}

// ---- commands ---------------------------------------------------------------

CommandResult analyze_auto(const InputDoc& doc) {
  if (auto bad = require_single_generator(doc, "analyze-auto")) return *bad;
  CommandResult res;
  auto g = build_genset(doc, res);
  if (!g) return res;
  const RatMatrix& m = g->gen(0);
  const AutoVerdict v = analyze_auto(m);
  const std::size_t r = doc.dimension;

  res.report = base_report("analyze-auto", doc);
  res.report["caps"] = {{"exponent_M", exponent_M(r)}, {"minkowski_B", minkowski_cap(r)}};
  res.report["label"] = g->label(0);
  res.report["ergodic"] = v.ergodic;
  res.report["distal"] = v.distal;
  res.report["root_of_unity_witness"] = optional_json(v.root_of_unity_witness);
  res.report["unipotence_exponent"] = optional_json(v.unipotence_exponent);
  res.report["charpoly"] = to_string(charpoly(m));
  res.report["finite_orbit_subspace"] = to_json(finite_orbit_subspace_auto(m));
  res.report["split"] = split_json(v.split);

  std::ostringstream out;
  out << "automorphism " << g->label(0) << " on " << (doc.mode == Mode::torus ? "T^" : "B_") << r << "\n";
  out << "charpoly: " << to_string(charpoly(m)) << "\n";
  out << "ergodic: " << yes_no(v.ergodic);
  if (v.root_of_unity_witness) out << " (eigenvalue is a primitive " << *v.root_of_unity_witness << "-th root of unity)";
  out << "\ndistal: " << yes_no(v.distal);
  if (v.unipotence_exponent) out << " (m^" << *v.unipotence_exponent << " is unipotent)";
  out << "\n" << split_text(v.split);
  res.text = out.str();
  return res;
}

CommandResult split(const InputDoc& doc) {
  if (auto bad = require_single_generator(doc, "split")) return *bad;
  CommandResult res;
  auto g = build_genset(doc, res);
  if (!g) return res;
  const SplitReport s = ergodic_distal_split(g->gen(0));
  const Subspace& vn = s.distal_part();
  const RatMatrix on_vn = restrict_action(g->gen(0), vn);
  const RatMatrix on_quotient = quotient_action(g->gen(0), vn);

  res.report = base_report("split", doc);
  res.report["caps"] = {{"exponent_M", exponent_M(doc.dimension)}};
  res.report["split"] = split_json(s);
  res.report["distal_part_charpoly"] = to_string(charpoly(on_vn));
  res.report["ergodic_part_charpoly"] = to_string(charpoly(on_quotient));
  res.text = split_text(s) + "charpoly on V_n: " + to_string(charpoly(on_vn)) +
             "\ncharpoly on the quotient: " + to_string(charpoly(on_quotient)) + "\n";
  return res;
}

CommandResult analyze_group(const InputDoc& doc, const Caps& caps) {
  CommandResult res;
  auto g = build_genset(doc, res);
  if (!g) return res;
  const std::size_t r = doc.dimension;
  logger()->debug("analyze-group: {} generators in dimension {}", g->size(), r);
  const GroupVerdict v = distal_series_group(*g);
  const std::size_t orbit_cap = caps.orbit_cap.value_or(minkowski_cap(r));

  res.report = base_report("analyze-group", doc);
  res.report["caps"] = {{"orbit_cap", orbit_cap}, {"exponent_M", exponent_M(r)}, {"minkowski_B", minkowski_cap(r)}};
  res.report["ergodic"] = v.ergodic;
  res.report["distal"] = v.distal;
  res.report["W"] = to_json(v.W);
  res.report["witness"] = nullptr;
  std::ostringstream out;
  out << "group of " << g->size() << " generator" << (g->size() == 1 ? "" : "s") << " on "
      << (doc.mode == Mode::torus ? "T^" : "B_") << r << "\n";
  out << "ergodic: " << yes_no(v.ergodic) << "\ndistal: " << yes_no(v.distal) << "\n";
  out << "finite-orbit subspace W: dim " << v.W.dim() << "  " << basis_text(v.W) << "\n";
  if (!v.ergodic) {
    const GroupErgodicity e = is_ergodic_group(*g, orbit_cap);
    if (e.witness) {
      json orbit = json::array();
      for (const auto& x : e.witness_orbit) orbit.push_back(to_json(x));
      res.report["witness"] = {
          {"character", to_json(*e.witness)}, {"orbit_size", e.witness_orbit.size()}, {"orbit", orbit}};
      out << "finite-orbit character " << to_string(*e.witness) << " with orbit of size " << e.witness_orbit.size()
          << "\n";
    }
  }
  res.report["series"] = series_json(v.series);
  json certs = json::array();
  for (const auto& w : v.certificates) certs.push_back(to_json(*g, w));
  res.report["certificates"] = certs;
  out << series_text(v.series);
  if (!v.certificates.empty()) {
    out << "infinite-order words used:";
    for (const auto& w : v.certificates) out << " " << to_string(*g, w);
    out << "\n";
  }
  res.text = out.str();
  return res;
}

CommandResult series(const InputDoc& doc) {
  CommandResult res;
  auto g = build_genset(doc, res);
  if (!g) return res;
  const GroupVerdict v = distal_series_group(*g);
  res.report = base_report("series", doc);
  res.report["caps"] = {{"exponent_M", exponent_M(doc.dimension)}, {"minkowski_B", minkowski_cap(doc.dimension)}};
  res.report["distal"] = v.distal;
  res.report["series"] = series_json(v.series);
  res.text = std::string("distal: ") + yes_no(v.distal) + "\n" + series_text(v.series);
  return res;
}

CommandResult find_ergodic(const InputDoc& doc, const Caps& caps) {
  CommandResult res;
  auto g = build_genset(doc, res);
  if (!g) return res;
  SearchLimits limits;
  limits.word_cap = caps.word_cap;
  limits.power_cap = caps.power_cap;
  limits.class_cap = caps.class_cap;
  Caps used = caps;
  used.class_cap = caps.class_cap.value_or(doc.dimension);

  res.report = base_report("find-ergodic", doc);
  res.report["caps"] = caps_to_json(used);
  res.report["found"] = nullptr;

  auto fill = [&](const ErgodicSearchResult& s) {
    if (s.found) {
      json w = to_json(*g, *s.found);
      w["ergodic"] = is_ergodic_auto(s.found->matrix).ergodic;
      res.report["found"] = w;
    }
    json filtration = json::array();
    for (const auto& step : s.filtration) {
      filtration.push_back(
          {{"quotient_dual", to_json(step.quotient_dual)}, {"alpha", to_json(*g, step.alpha)}, {"level", step.level}});
    }
    res.report["filtration"] = filtration;
    res.report["from_fallback"] = s.from_fallback;
    res.report["diagnostics"] = s.diagnostics;
  };

  std::ostringstream out;
  try {
    const ErgodicSearchResult s = find_ergodic_nilpotent(*g, limits);
    fill(s);
    res.report["status"] = "found";
    out << "ergodic element: " << to_string(*g, *s.found) << (s.from_fallback ? " (exhaustive scan)" : "") << "\n";
    out << "matrix: " << to_string(s.found->matrix) << "\n";
    for (const auto& step : s.filtration) {
      out << "  step: alpha = " << to_string(*g, step.alpha) << " (level " << step.level << "), quotient dual dim "
          << step.quotient_dual.dim() << "\n";
    }
  } catch (const NotNilpotent& e) {
    res.exit_code = exit_not_nilpotent;
    res.error = e.what();
    res.report["status"] = "not_nilpotent";
    res.report["nilpotency_witness"] = e.witness() ? to_json(*g, *e.witness()) : json(nullptr);
    out << "not nilpotent within class cap " << *used.class_cap;
    if (e.witness()) out << "; nontrivial commutator " << to_string(*g, *e.witness());
    out << "\n";
  } catch (const NotErgodicGroup& e) {
    res.exit_code = exit_not_ergodic;
    res.error = e.what();
    res.report["status"] = "not_ergodic";
    out << "the group is not ergodic\n";
  } catch (const CapsExhausted& e) {
    res.exit_code = exit_caps_exhausted;
    res.error = e.what();
    fill(e.partial());
    res.report["status"] = "caps_exhausted";
    out << "caps exhausted (word cap " << caps.word_cap << ", power cap " << caps.power_cap << ")\n";
    for (const auto& d : e.partial().diagnostics) out << "  " << d << "\n";
  }
  if (res.exit_code != exit_ok) res.report["error"] = res.error;
  res.text = out.str();
  return res;
}

CommandResult example(std::string_view name, const ExampleParams& params) {
  using namespace soldyn::examples;
  std::optional<GenSet> g;
  try {
    if (name == "tower") {
      if (!params.k || *params.k == 0) return failure(exit_parse, "example tower needs --k >= 1");
      g.emplace(*params.k, Mode::torus, std::vector<RatMatrix>{tower_alpha(*params.k)},
                std::vector<std::string>{"alpha" + std::to_string(*params.k)});
    } else if (name == "golden") {
      g.emplace(2, Mode::torus, std::vector<RatMatrix>{golden_mean()});
    } else if (name == "rotation") {
      g.emplace(2, Mode::torus, std::vector<RatMatrix>{rotation_order4()});
    } else if (name == "unipotent") {
      g.emplace(2, Mode::torus, std::vector<RatMatrix>{unipotent2()});
    } else if (name == "heisenberg") {
      g.emplace(3, Mode::torus, heisenberg_pair(), std::vector<std::string>{"x", "y"});
    } else if (name == "diag-pair") {
      g.emplace(2, Mode::solenoid,
                std::vector<RatMatrix>{RatMatrix{{2, 0}, {0, 1}}, RatMatrix{{1, 0}, {0, 2}}});
    } else if (name == "gamma-plus") {
      std::optional<GenSet> base;
      if (params.base == "golden") base.emplace(2, Mode::torus, std::vector<RatMatrix>{golden_mean()});
      else if (params.base == "rotation") base.emplace(2, Mode::torus, std::vector<RatMatrix>{rotation_order4()});
      else if (params.base == "unipotent") base.emplace(2, Mode::torus, std::vector<RatMatrix>{unipotent2()});
      else if (params.base == "two") base.emplace(1, Mode::solenoid, std::vector<RatMatrix>{RatMatrix{{2}}});
      else return failure(exit_parse, "unknown gamma-plus base '" + params.base + "' (golden, rotation, unipotent, two)");
      const std::size_t n = base->dim();
      std::vector<QVec> translations;
      for (const auto& t : params.translations) {
        std::size_t idx = 0;
        if (t.size() < 2 || t[0] != 'e' || !std::all_of(t.begin() + 1, t.end(), [](unsigned char c) { return std::isdigit(c) != 0; }) ||
            (idx = std::stoul(t.substr(1))) == 0 || idx > n) {
          return failure(exit_parse, "translation '" + t + "' is not one of e1..e" + std::to_string(n));
        }
        translations.push_back(unit_vector(n, idx - 1));
      }
      g.emplace(gamma_plus_genset(*base, translations));
    } else {
      return failure(exit_parse, "unknown example '" + std::string(name) +
                                     "' (tower, gamma-plus, golden, rotation, unipotent, heisenberg, diag-pair)");
    }
  } catch (const std::invalid_argument& e) {
    return failure(exit_parse, e.what());
  }
  CommandResult res;
  const InputDoc doc = input_from_genset(*g);
  res.report = render_input(doc);
  res.text = res.report.dump() + "\n";
  return res;
}

CommandResult simulate(const InputDoc& doc, const SimulateParams& params) {
  if (params.generator == 0 || params.generator > doc.generators.size())
    return failure(exit_parse, "--generator must be between 1 and " + std::to_string(doc.generators.size()));
  const RatMatrix& m = doc.generators[params.generator - 1];
  if (!torus_validate(m))
    return failure(exit_invalid_matrix, "simulate needs a unimodular integer matrix (torus automorphism)");
  if (params.x0 && params.x0->size() != doc.dimension)
    return failure(exit_parse, "--x0 must have " + std::to_string(doc.dimension) + " coordinates");
  if (params.iterations == 0) return failure(exit_parse, "--iterations must be positive");

  SimulationOptions opts;
  opts.iterations = params.iterations;
  opts.seed = params.seed;
  opts.x0 = params.x0;
  opts.keep_trajectory = params.csv_path.has_value();
  const OrbitStats s = torus_orbit_stats(m, opts);

  if (params.csv_path) {
    std::ofstream csv(*params.csv_path);
    if (!csv) return failure(exit_parse, "cannot write " + *params.csv_path);
    csv.imbue(std::locale::classic());
    csv.precision(17);
    for (const auto& p : s.trajectory) {
      for (std::size_t i = 0; i < p.size(); ++i) csv << (i ? "," : "") << p[i];
      csv << "\n";
    }
  }

  CommandResult res;
  res.report = base_report("simulate", doc);
  res.report["caps"] = {{"iterations", params.iterations}, {"seed", params.seed}};
  res.report["generator"] = params.generator;
  res.report["x0"] = params.x0 ? json(*params.x0) : json(nullptr);
  res.report["iterations"] = s.iterations;
  res.report["min_dist_to_zero"] = s.min_dist_to_zero;
  res.report["discrepancy"] = s.discrepancy;
  res.report["heuristic"] = true;
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << "iterations: " << s.iterations << "\nmin distance to 0: " << s.min_dist_to_zero
      << "\ndiscrepancy (2^r half-cells): " << s.discrepancy << "\n(heuristic cross-check, not a verdict)\n";
  res.text = out.str();
  return res;
}

// ---- driver -----------------------------------------------------------------

namespace {

std::string read_source(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

using FileCommand = std::function<CommandResult(const InputDoc&)>;

CommandResult run_on_file(const std::string& path, const FileCommand& cmd) {
  try {
    const InputDoc doc = parse_input_text(read_source(path));
    return cmd(doc);
  } catch (const ParseError& e) {
    return failure(exit_parse, path + ": " + e.what());
  } catch (const SingularMatrix& e) {
    return failure(exit_invalid_matrix, path + ": " + e.what());
  }
}

int emit(const std::vector<std::string>& files, const std::vector<CommandResult>& results, bool as_json,
         std::ostream& out, std::ostream& err) {
  int code = exit_ok;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].error.empty()) err << "soldyn: " << results[i].error << "\n";
    code = std::max(code, results[i].exit_code);
  }
  if (results.size() == 1) {
    const auto& r = results.front();
    if (!r.report.is_null()) {
      if (as_json) out << r.report.dump(2) << "\n";
      else out << r.text;
    }
    return code;
  }
  if (as_json) {
    json all = json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      all.push_back({{"file", files[i]}, {"exit_code", results[i].exit_code}, {"report", results[i].report}});
    }
    out << json{{"results", all}}.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) {
      out << "== " << files[i] << " (exit " << results[i].exit_code << ") ==\n" << results[i].text;
    }
  }
  return code;
}

std::vector<CommandResult> run_files(const std::vector<std::string>& files, const FileCommand& cmd, std::size_t jobs) {
  std::vector<CommandResult> results(files.size());
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(files.size(), 1));
  if (jobs == 1) {
    for (std::size_t i = 0; i < files.size(); ++i) results[i] = run_on_file(files[i], cmd);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < files.size(); i = next++) results[i] = run_on_file(files[i], cmd);
    });
  }
  pool.clear();
  return results;
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  std::string item;
  while (std::getline(in, item, ',')) {
    std::istringstream cell(item);
    cell.imbue(std::locale::classic());
    double x = 0;
    if (!(cell >> x)) throw CLI::ValidationError("--x0", "'" + item + "' is not a number");
    out.push_back(x);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  logger();
  CLI::App app{"Ergodicity and distality of automorphism groups of tori and solenoids", "soldyn"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  bool want_json = false;
  bool want_text = false;
  std::size_t jobs = 1;
  Caps caps;
  std::vector<std::string> files;

  auto* json_flag = app.add_flag("--json", want_json, "JSON report (default)");
  auto* text_flag = app.add_flag("--text", want_text, "human-readable report");
  json_flag->excludes(text_flag);
  app.add_option("--jobs", jobs, "process input files in parallel")->check(CLI::PositiveNumber);

  auto add_files = [&](CLI::App* sub) { sub->add_option("files", files, "input JSON files ('-' for stdin)")->required(); };

  auto* auto_cmd = app.add_subcommand("analyze-auto", "ergodicity, distality and split of one automorphism");
  add_files(auto_cmd);
  auto* split_cmd = app.add_subcommand("split", "ergodic/distal split of one automorphism");
  add_files(split_cmd);
  auto* group_cmd = app.add_subcommand("analyze-group", "finite-orbit subspace, ergodicity and distality of a group");
  add_files(group_cmd);
  group_cmd->add_option("--orbit-cap", caps.orbit_cap, "cap on enumerated witness orbits (default Minkowski bound)");
  auto* series_cmd = app.add_subcommand("series", "distal structure series of a group");
  add_files(series_cmd);
  auto* find_cmd = app.add_subcommand("find-ergodic", "search for an ergodic element of a nilpotent group");
  add_files(find_cmd);
  find_cmd->add_option("--word-cap", caps.word_cap, "word length cap")->capture_default_str();
  find_cmd->add_option("--power-cap", caps.power_cap, "largest j tried in alpha^j * beta")->capture_default_str();
  find_cmd->add_option("--class-cap", caps.class_cap, "nilpotency class cap (default: dimension)");

  std::string example_name;
  ExampleParams ex;
  std::string translations;
  auto* example_cmd = app.add_subcommand("example", "emit a fixture as an input document");
  example_cmd->add_option("name", example_name, "tower, gamma-plus, golden, rotation, unipotent, heisenberg, diag-pair")
      ->required();
  example_cmd->add_option("--k", ex.k, "size of the tower");
  example_cmd->add_option("--base", ex.base, "gamma-plus base: golden, rotation, unipotent, two")->capture_default_str();
  example_cmd->add_option("--translations", translations, "gamma-plus translations, e.g. e1,e2");

  SimulateParams sim;
  std::string x0_text;
  auto* sim_cmd = app.add_subcommand("simulate", "floating-point orbit statistics on the torus (heuristic)");
  add_files(sim_cmd);
  sim_cmd->add_option("--iterations", sim.iterations, "orbit length")->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "seed for a random start")->capture_default_str();
  sim_cmd->add_option("--x0", x0_text, "starting point, e.g. 0.1,0.2");
  sim_cmd->add_option("--generator", sim.generator, "1-based generator index")->capture_default_str();
  sim_cmd->add_option("--csv", sim.csv_path, "write the orbit as CSV");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!x0_text.empty()) sim.x0 = parse_point(x0_text);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse;
  }
  const bool as_json = !want_text;
  logger()->info("soldyn {} jobs={}", tool_version(), jobs);

  if (example_cmd->parsed()) {
    std::stringstream list(translations);
    for (std::string item; std::getline(list, item, ',');)
      if (!item.empty()) ex.translations.push_back(item);
    const CommandResult r = example(example_name, ex);
    if (!r.error.empty()) err << "soldyn: " << r.error << "\n";
    if (r.exit_code == exit_ok) out << (as_json ? r.report.dump(2) + "\n" : r.text);
    return r.exit_code;
  }

  FileCommand cmd;
  if (auto_cmd->parsed()) cmd = [](const InputDoc& d) { return analyze_auto(d); };
  else if (split_cmd->parsed()) cmd = [](const InputDoc& d) { return split(d); };
  else if (group_cmd->parsed()) cmd = [&](const InputDoc& d) { return analyze_group(d, caps); };
  else if (series_cmd->parsed()) cmd = [](const InputDoc& d) { return series(d); };
  else if (find_cmd->parsed()) cmd = [&](const InputDoc& d) { return find_ergodic(d, caps); };
  else cmd = [&](const InputDoc& d) { return simulate(d, sim); };

  return emit(files, run_files(files, cmd, jobs), as_json, out, err);
}

}  // namespace soldyn::cli
