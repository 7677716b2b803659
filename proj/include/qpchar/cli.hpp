#pragma once

// Command-line front end plumbing. The run_* functions do everything except
// argument parsing: they validate a RunConfig, compute through the library,
// serialize, and return the process exit code (0 success or verified equal,
// 1 verification mismatch, 2 usage or configuration error). Keeping them on
// plain streams makes the binary a thin wrapper and the behavior testable
// in-process.

#include <iosfwd>
#include <optional>
#include <string>

#include "qpchar/characters.hpp"
#include "qpchar/qpbasis.hpp"
#include "qpchar/rootsys.hpp"
#include "qpchar/series.hpp"

namespace qpchar {

enum class Command { character, verify, enumerate_basis, roots };

enum class Method { direct, fermionic, bosonic, pbw };

enum class OutputFormat { json, csv, text };

// "direct" / "fermionic" / "bosonic" / "pbw"; empty optional on anything else.
std::optional<Method> parse_method(const std::string& text);
std::string method_name(Method method);

// "json" / "csv" / "text".
std::optional<OutputFormat> parse_format(const std::string& text);
std::string format_name(OutputFormat format);

// "verma" or a decimal integer >= 1.
std::optional<Level> parse_level(const std::string& text);
std::string level_name(const Level& level);

struct RunConfig {
    Command command = Command::character;
    AlgebraFamily family = AlgebraFamily::A;
    int rank = 1;
    Level level = Level::verma();
    int qmax = 0;
    std::optional<Method> method;    // character
    std::optional<Method> method_a;  // verify
    std::optional<Method> method_b;  // verify
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> output_path;  // default: the out stream
    bool specialize = false;                 // substitute y_i = 1 after computing
    int threads = 1;  // accepted as a hint; output bytes never depend on it
};

// Serializes one series in the configured format. JSON carries the
// family/rank/level/qmax/method header and one {"q","y","c"} object per
// term in (q, y) order, coefficients as decimal strings; CSV uses the
// header q,y1,...,yl,c in the same order; text groups terms by q-degree.
std::string serialize_series(const RunConfig& cfg, Method method, const TruncatedSeries& series);

// Inverse of the JSON serialization, for round-trip checks and consumers.
// Throws std::invalid_argument on malformed input.
TruncatedSeries parse_series_json(const std::string& text);

// Compute the series requested by cfg.method and write it. All output is
// buffered and emitted only on success, so a failed run writes nothing to
// the data stream.
int run_char(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

// Compute cfg.method_a and cfg.method_b and compare exactly. Writes the
// comparison report in the configured format; exit 0 when equal, 1 with
// the first mismatching coefficient otherwise.
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

// List the admissible quasi-particle monomials up to cfg.qmax in canonical
// order, with per-color (charge, energy) pairs, degree, and color-type.
int run_enum(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

// List the positive roots in simple-root coordinates.
int run_roots(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

// Dispatch on cfg.command.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

}  // namespace qpchar
