#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "scon/io.hpp"

using namespace scon;
using namespace scon::testing;

namespace {

const ParseDiagnostic* first_error(const std::vector<ParseDiagnostic>& diags) {
  for (const auto& d : diags)
    if (d.severity == Severity::Error) return &d;
  return nullptr;
}

}  // namespace

TEST_CASE("fixture files parse to the in-code running example") {
  auto schema = parse_schema(read_fixture("s1.schema"));
  REQUIRE(schema.ok());
  CHECK(schema.diagnostics.empty());
  CHECK(*schema.value == s1());

  auto rules = parse_rules(read_fixture("rules_r1_r2.rules"));
  REQUIRE(rules.ok());
  REQUIRE(rules.value->rules.size() == 2);
  CHECK(rules.value->rules[0].name == "r1");
  CHECK(rules.value->rules[0].antecedent == r1().antecedent);
  CHECK(rules.value->rules[0].consequent == r1().consequent);
  CHECK(rules.value->rules[1].antecedent == r2().antecedent);
  CHECK(rules.value->rules[1].consequent == r2().consequent);

  auto graph = parse_graph(read_fixture("i1.graph"));
  REQUIRE(graph.ok());
  CHECK(*graph.value == i1());

  auto critical = parse_graph(read_fixture("critical_s1_r2.graph"));
  REQUIRE(critical.ok());
  CHECK(critical.value->size() == 77);
}

TEST_CASE("serializations round-trip byte for byte") {
  std::string schema_text = serialize_schema(s1());
  auto schema = parse_schema(schema_text);
  REQUIRE(schema.ok());
  CHECK(serialize_schema(*schema.value) == schema_text);

  RuleSet rules{{r1(), r2()}};
  std::string rules_text = serialize_rules(rules);
  auto reparsed = parse_rules(rules_text);
  REQUIRE(reparsed.ok());
  CHECK(serialize_rules(*reparsed.value) == rules_text);

  std::string graph_text = serialize_graph(i1());
  auto graph = parse_graph(graph_text);
  REQUIRE(graph.ok());
  CHECK(serialize_graph(*graph.value) == graph_text);
}

TEST_CASE("schema serialization is sorted and ends with one @nolit line") {
  std::string text = serialize_schema(s1());
  CHECK(text ==
        "?v1 sosa:observedProperty :CO_Danger .\n"
        "?v2 sosa:observedProperty :WorkerTag .\n"
        "?v3 sosa:hasFeatureOfInterest :TunnelA .\n"
        "?v5 sosa:hasResult ?v4 .\n"
        "@nolit ?v1 ?v2 ?v3 ?v5 .\n");

  // Even an unrestricted schema carries the line.
  GraphPattern g;
  g.add(TriplePattern(u(":a"), u(":p"), v("x")));
  TriplestoreSchema open(std::move(g), {});
  CHECK(serialize_schema(open) == ":a :p ?x .\n@nolit .\n");
}

TEST_CASE("literal escapes survive the round trip") {
  Graph g;
  g.insert(Triple(u(":a"), u(":p"), lit("say \"hi\" and \\ back")));
  auto reparsed = parse_graph(serialize_graph(g));
  REQUIRE(reparsed.ok());
  CHECK(*reparsed.value == g);
}

TEST_CASE("comments and blank lines are ignored") {
  auto schema = parse_schema("# header\n\n?a :p :b . # trailing note\n\n# footer\n");
  REQUIRE(schema.ok());
  CHECK(schema.value->graph().size() == 1);

  auto empty = parse_schema("# nothing\n");
  REQUIRE(empty.ok());
  CHECK(empty.value->empty());
}

TEST_CASE("schema diagnostics carry positions") {
  auto missing_dot = parse_schema("?a :p :b\n");
  CHECK_FALSE(missing_dot.ok());
  const auto* d = first_error(missing_dot.diagnostics);
  REQUIRE(d != nullptr);
  CHECK(d->line == 1);
  CHECK(d->message == "triple line must end with '.'");

  auto wrong_arity = parse_schema("?a :p .\n");
  REQUIRE(first_error(wrong_arity.diagnostics) != nullptr);
  CHECK(first_error(wrong_arity.diagnostics)->message == "expected 3 terms, got 2");

  auto duplicate = parse_schema("?a :p :b .\n?a :q :c .\n");
  CHECK_FALSE(duplicate.ok());
  REQUIRE(first_error(duplicate.diagnostics) != nullptr);
  CHECK(first_error(duplicate.diagnostics)->line == 2);

  auto unknown_nolit = parse_schema("?a :p :b .\n@nolit ?zz .\n");
  CHECK_FALSE(unknown_nolit.ok());
  CHECK(first_error(unknown_nolit.diagnostics)->line == 2);
  CHECK(first_error(unknown_nolit.diagnostics)->column == 8);

  auto bad_literal_subject = parse_schema("\"x\" :p :b .\n");
  CHECK_FALSE(bad_literal_subject.ok());

  auto bad_uri = parse_schema("?a bad$uri :b .\n");
  CHECK_FALSE(bad_uri.ok());

  auto unterminated = parse_schema("?a :p \"open .\n");
  CHECK_FALSE(unterminated.ok());
}

TEST_CASE("omitting @nolit for a subject variable only warns") {
  auto schema = parse_schema("?a :p :b .\n");
  REQUIRE(schema.ok());
  REQUIRE(schema.diagnostics.size() == 1);
  CHECK(schema.diagnostics[0].severity == Severity::Warning);
  CHECK(schema.value->no_literal(v("a")));
}

TEST_CASE("rule diagnostics") {
  auto missing_arrow = parse_rules("RULE r {\n?a :p ?b .\n}\n");
  CHECK_FALSE(missing_arrow.ok());
  CHECK(first_error(missing_arrow.diagnostics)->message == "rule 'r' is missing '=>'");

  auto duplicate = parse_rules(
      "RULE r {\n?a :p ?b .\n=>\n?a :q ?b .\n}\n"
      "RULE r {\n?a :p ?b .\n=>\n?a :q ?b .\n}\n");
  CHECK_FALSE(duplicate.ok());
  CHECK(first_error(duplicate.diagnostics)->message == "duplicate rule name 'r'");

  auto unsafe = parse_rules("RULE r {\n?a :p ?b .\n=>\n?c :q ?b .\n}\n");
  CHECK_FALSE(unsafe.ok());
  CHECK(first_error(unsafe.diagnostics)->message ==
        "rule 'r': unsafe variable ?c in consequent");

  auto unterminated = parse_rules("RULE r {\n?a :p ?b .\n=>\n?a :q ?b .\n");
  CHECK_FALSE(unterminated.ok());

  auto stray = parse_rules("?a :p ?b .\n");
  CHECK_FALSE(stray.ok());
  CHECK(first_error(stray.diagnostics)->message == "expected 'RULE <name> {'");

  auto none = parse_rules("# empty\n");
  REQUIRE(none.ok());
  CHECK(none.value->rules.empty());
}

TEST_CASE("graph files reject variables") {
  auto bad = parse_graph("?a :p :b .\n");
  CHECK_FALSE(bad.ok());
  CHECK(first_error(bad.diagnostics)->message == "variables are not allowed in graph files");
}
