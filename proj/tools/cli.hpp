#pragma once

// Command-line front end: input documents, reports and command dispatch.

#include "soldyn/genset.hpp"
#include "soldyn/matrix.hpp"

#include "json.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace soldyn::cli {

using nlohmann::json;

// Stable exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_parse = 2;
inline constexpr int exit_invalid_matrix = 3;
inline constexpr int exit_not_nilpotent = 4;
inline constexpr int exit_not_ergodic = 5;
inline constexpr int exit_caps_exhausted = 6;

std::string_view tool_version();

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"dimension": r, "mode": "torus"|"solenoid",
///  "generators": [[["p/q", ...], ...], ...], "labels": [...]}
struct InputDoc {
  std::size_t dimension = 0;
  Mode mode = Mode::solenoid;
  std::vector<RatMatrix> generators;
  std::vector<std::string> labels;

  friend bool operator==(const InputDoc&, const InputDoc&) = default;
};

/// Schema and rational-syntax checks only; throws ParseError.
InputDoc parse_input(const json& doc);
InputDoc parse_input_text(std::string_view text);
json render_input(const InputDoc& doc);
InputDoc input_from_genset(const GenSet& g);

json to_json(const Rat& q);
json to_json(const QVec& v);
json to_json(const RatMatrix& m);
json to_json(const Subspace& s);
json to_json(const GenSet& g, const Word& w);
QVec qvec_from_json(const json& j);
RatMatrix matrix_from_json(const json& j);

struct Caps {
  std::size_t word_cap = 4;
  std::size_t power_cap = 8;
  std::optional<std::size_t> class_cap;
  std::optional<std::size_t> orbit_cap;
};

json caps_to_json(const Caps& caps);

struct CommandResult {
  int exit_code = exit_ok;
  json report;
  /// Human-readable rendering of the report.
  std::string text;
  /// Message for stderr (parse and validation failures).
  std::string error;
};

CommandResult analyze_auto(const InputDoc& doc);
CommandResult split(const InputDoc& doc);
CommandResult analyze_group(const InputDoc& doc, const Caps& caps);
CommandResult series(const InputDoc& doc);
CommandResult find_ergodic(const InputDoc& doc, const Caps& caps);

struct ExampleParams {
  std::optional<std::size_t> k;
  std::string base = "golden";
  std::vector<std::string> translations;
};

/// tower, gamma-plus, golden, rotation, unipotent, heisenberg, diag-pair.
CommandResult example(std::string_view name, const ExampleParams& params);

struct SimulateParams {
  std::size_t iterations = 100000;
  std::uint64_t seed = 0;
  std::optional<std::vector<double>> x0;
  std::size_t generator = 1;
  std::optional<std::string> csv_path;
};

CommandResult simulate(const InputDoc& doc, const SimulateParams& params);

/// Full command line (argv[0] excluded). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace soldyn::cli
