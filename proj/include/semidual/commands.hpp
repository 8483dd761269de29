#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "semidual/semilattice.hpp"

namespace semidual {

using Json = nlohmann::ordered_json;

/// Raised for unreadable input: bad JSON, missing or mistyped fields,
/// unknown or duplicate labels.  Algebraic failures raise `Error` instead.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedMap {
  std::string name;
  Homomorphism hom;
};

/// A validated input document.  The meet table is the normative form; cover
/// lists are only an input convenience.
struct Document {
  Semilattice algebra;
  std::optional<ElementMap> monotone;
  std::vector<NamedMap> maps;  // in input order
};

/// Throws ParseError, or Error when the data is well formed but violates the
/// semilattice, monotonicity or homomorphism laws.
Document parse_document(std::string const& text);
Document document_from_json(Json const& j);
/// Canonical form: elements, meet table, top, then monotone and maps when
/// present.  A map whose target differs from the source carries it inline.
Json document_to_json(Document const& doc);

struct CommandOptions {
  std::uint64_t seed = 0;
  std::size_t limit = 12;  // exhaustive S4 cap; sampling above it
  bool all = false;        // verify-all: keep going after a failure
  bool verify = false;     // enumerate: run verify-all per instance
  std::optional<std::string> map;  // extend: a single named map
};

enum ExitCode : int { kOk = 0, kParse = 1, kValidation = 2, kCounterexample = 3 };

struct CommandResult {
  int exit_code = kOk;
  Json report;      // {command, status, payload, checks}
  std::string dot;  // Graphviz output, empty when the command has none
};

/// `input` is the document text, or the decimal n for "enumerate".  Never
/// throws for bad input; the failure is folded into the report and code.
CommandResult run_command(std::string const& command, std::string const& input, CommandOptions const& options = {});

std::vector<std::string> const& command_names();

}  // namespace semidual
