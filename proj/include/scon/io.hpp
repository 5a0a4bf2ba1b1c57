#ifndef SCON_IO_HPP
#define SCON_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scon/rdf.hpp"
#include "scon/rules.hpp"
#include "scon/schema.hpp"

namespace scon {

enum class Severity { Error, Warning };

struct ParseDiagnostic {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  std::string message;
  Severity severity = Severity::Error;
};

std::string to_string(const ParseDiagnostic& d);

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  bool has_errors() const {
    for (const auto& d : diagnostics)
      if (d.severity == Severity::Error) return true;
    return false;
  }
};

// Line-oriented text formats. '#' starts a comment; triple lines are
// whitespace-separated terms closed by a standalone dot. URIs are prefixed
// names, literals are double-quoted with \" and \\ escapes, variables carry
// a '?' sigil. Schema files add '@nolit ?a ?b .' lines; rule files wrap
// triple lines in 'RULE name { antecedent => consequent }' blocks.

ParseResult<TriplestoreSchema> parse_schema(std::string_view text);
ParseResult<RuleSet> parse_rules(std::string_view text);
ParseResult<Graph> parse_graph(std::string_view text);

// Canonical serializations: lexicographically sorted lines, byte-stable.
// Schema output ends with exactly one consolidated @nolit line.
std::string serialize_schema(const TriplestoreSchema& s);
std::string serialize_rules(const RuleSet& rules);
std::string serialize_graph(const Graph& g);

}  // namespace scon

#endif
