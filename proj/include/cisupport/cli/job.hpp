#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cisupport/resmod/module.hpp"
#include "cisupport/resmod/ring.hpp"

namespace cisupport {

/// Diagnostic with a 1-based line and column into the job text.
class JobParseError : public std::runtime_error {
 public:
  JobParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_, column_;
  std::string message_;
};

/// Subspace matrix given as `RxC:e11,e12,...` (row-major).
struct SubspaceSpec {
  int rows = 0, cols = 0;
  std::vector<long long> entries;
  friend bool operator==(const SubspaceSpec&, const SubspaceSpec&) = default;
};

/// Command name plus the options that were set; unset options take the
/// defaults of the subcommand.
struct CommandSpec {
  std::string name;
  std::optional<int> length, window, degree_bound;
  std::optional<std::vector<long long>> point;
  std::optional<SubspaceSpec> subspace;
  /// Polynomials in chi1..chic, canonical text.
  std::optional<std::vector<std::string>> cone;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> module, with;
  bool allow_unstable = false;

  /// Fields set in `o` replace those here.
  void merge(const CommandSpec& o);
  friend bool operator==(const CommandSpec&, const CommandSpec&) = default;
};

/// Module given by generator degrees and relation columns (entries in
/// canonical polynomial text), or the residue field.
struct ModuleSpec {
  std::string name;
  bool residue = false;
  std::vector<int> generators;
  std::vector<std::vector<std::string>> columns;
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

struct JobSpec {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<int> weights;
  std::vector<std::string> relations;
  std::vector<ModuleSpec> modules;
  std::optional<CommandSpec> command;
  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

extern const std::vector<std::string> kCommandNames;

/// Parses and validates job text: field, ring and module sections must be
/// well formed, the relations a regular sequence in the square of the
/// maximal ideal and every module homogeneous.
JobSpec parse_input(const std::string& text);

/// Parses one command line such as `betti --length 5` (the first token is
/// the command name; an empty name is allowed when `need_name` is false).
CommandSpec parse_command(const std::vector<std::string>& tokens, bool need_name = true);

/// Canonical text; parse_input(render(j)) == j.
std::string render(const JobSpec& job);
std::string render_command(const CommandSpec& c);

/// The ring and modules a job describes.
struct JobContext {
  CIRing ci;
  std::vector<std::pair<std::string, GradedModule>> modules;
  const GradedModule& module(const std::string& name) const;
};
JobContext materialize(const JobSpec& job);

/// Splits on whitespace, honoring double quotes.
std::vector<std::string> tokenize_command(const std::string& line);

}  // namespace cisupport
