#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "biamalg/ring.hpp"

namespace biamalg::script {

enum class StatementKind { ring, module, ideal, hom, check, verify };
std::string_view to_string(StatementKind k) noexcept;

/// One line of a script. Definitions bind `name`; `op` is the constructor,
/// property or verifier id; `args` are the remaining tokens.
struct Statement {
  StatementKind kind = StatementKind::ring;
  std::string name;
  std::string op;
  std::vector<std::string> args;
  std::size_t line = 0;

  /// Source positions are not part of the comparison.
  friend bool operator==(const Statement& a, const Statement& b) {
    return a.kind == b.kind && a.name == b.name && a.op == b.op && a.args == b.args;
  }
};

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

enum class ParseErrorKind { syntax, unknown_command, redefinition, undefined_name, kind_mismatch };
std::string_view to_string(ParseErrorKind k) noexcept;

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message);
  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Parses the whole text, throwing ParseError at the first problem.
Script parse_script(std::string_view text);
/// Canonical single-space rendering; parse_script(print_script(s)) == s.
std::string print_script(const Script& script);
std::string print_statement(const Statement& s);

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t max_elements = kDefaultElementCap;
  bool fail_fast = false;
  /// Adds per-statement timings to the report.
  bool verbose = false;
  /// Sampled content-equation cross-check run alongside `check gaussian`.
  std::size_t content_trials = 200;
};

struct StatementResult {
  Statement statement;
  /// "ok", "error", "skipped", or a theorem status for verify statements.
  std::string status;
  nlohmann::json result;  // null when the statement failed
  std::optional<std::string> error_kind;
  std::optional<std::string> error_message;
  double elapsed_ms = 0.0;
};

struct RunReport {
  std::string version;
  std::uint64_t seed = 0;
  bool include_timings = false;
  std::vector<StatementResult> statements;

  /// True iff no statement errored or was skipped and none reported VIOLATION.
  bool ok() const noexcept;
  int exit_code() const noexcept { return ok() ? 0 : 1; }
};

RunReport run_script(const Script& script, const RunOptions& options = {});

/// Stable machine-readable form: {version, seed, status, statements: [...]}.
nlohmann::json to_json(const RunReport& report);
/// Terminal rendering built from the same data as the JSON form.
std::string render_text(const RunReport& report);

/// Embedded copies of the shipped example scripts ("2.5", "2.7").
std::optional<std::string_view> example_script(std::string_view id);

}  // namespace biamalg::script
