#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "scon/consequence.hpp"

using namespace scon;
using namespace scon::testing;

namespace {

TriplestoreSchema make(std::vector<TriplePattern> patterns, std::set<Term> nolit = {}) {
  return TriplestoreSchema(GraphPattern(std::move(patterns)), std::move(nolit));
}

// Expected result of closing the running example: the original schema plus
// the two derived ground facts.
TriplestoreSchema s1_closed() {
  GraphPattern g = s1().graph();
  g.add(TriplePattern(u(":TunnelA"), u("rdf:type"), u(":OffLimitArea")));
  g.add(TriplePattern(u(":TunnelA"), u("rdf:type"), u(":TrespassedArea")));
  return TriplestoreSchema(std::move(g), s1().nolit());
}

LambdaUri lambda_for(const Rule& r) {
  return fresh_lambda(s1(), pattern_constants(r.antecedent));
}

}  // namespace

TEST_CASE("antecedent mappings per method") {
  LambdaUri lambda = lambda_for(r2());

  auto score = compute_mappings(s1(), r2(), Method::Score, lambda);
  REQUIRE(score.size() == 1);
  CHECK(score[0].value(v("v1")) == lambda.uri);
  CHECK(score[0].value(v("v2")) == u(":TunnelA"));

  // Over the critical instance every pool URI can observe; the feature of
  // interest is pinned to the one constant.
  auto critical = compute_mappings(s1(), r2(), Method::Critical, lambda);
  CHECK(critical.size() == 7);
  for (const auto& m : critical) CHECK(m.value(v("v2")) == u(":TunnelA"));

  CHECK(compute_mappings(s1(), r1(), Method::Score, lambda_for(r1())).empty());
  CHECK(compute_mappings(s1(), r1(), Method::Critical, lambda_for(r1())).empty());
}

TEST_CASE("mapping filter accepts the running-example match") {
  LambdaUri lambda = lambda_for(r2());
  Mapping m;
  m.bind(v("v1"), lambda.uri);
  m.bind(v("v2"), u(":TunnelA"));

  FilterOutcome out = filter_mapping(m, r2(), s1(), Method::Score, lambda);
  CHECK(out.accepted);
  // Subject positions of antecedent and consequent; the literal-object
  // antecedent triple is fine because the result pattern admits literals.
  CHECK(out.delta_m == std::set<Term>{v("v1"), v("v2")});
}

TEST_CASE("mapping filter restricts reserved-bound object variables") {
  // Schema allows no literals anywhere, so an object variable matched via the
  // reserved constant must stay URI-only downstream.
  TriplestoreSchema s = make({TriplePattern(v("x"), u(":p"), v("y"))}, {v("x"), v("y")});
  GraphPattern a, c;
  a.add(TriplePattern(v("a"), u(":p"), v("b")));
  c.add(TriplePattern(u(":c"), u(":q"), v("b")));
  Rule r{"rx", a, c};
  LambdaUri lambda = fresh_lambda(s, RuleSet{{r}});

  Mapping m;
  m.bind(v("a"), lambda.uri);
  m.bind(v("b"), lambda.uri);
  FilterOutcome out = filter_mapping(m, r, s, Method::Score, lambda);
  CHECK(out.accepted);
  CHECK(out.delta_m.count(v("b")) == 1);
}

TEST_CASE("mapping filter rejects literals the schema cannot produce") {
  TriplestoreSchema s = make({TriplePattern(v("x"), u(":p"), v("y"))}, {v("x"), v("y")});
  GraphPattern a, c;
  a.add(TriplePattern(v("a"), u(":p"), lit("1")));
  c.add(TriplePattern(u(":c"), u(":q"), u(":d")));
  Rule r{"ry", a, c};
  LambdaUri lambda = fresh_lambda(s, RuleSet{{r}});

  Mapping m;
  m.bind(v("a"), lambda.uri);
  CHECK_FALSE(filter_mapping(m, r, s, Method::Score, lambda).accepted);

  // With a literal-admitting object the same mapping passes.
  TriplestoreSchema permissive = make({TriplePattern(v("x"), u(":p"), v("y"))}, {v("x")});
  LambdaUri lambda2 = fresh_lambda(permissive, RuleSet{{r}});
  CHECK(filter_mapping(m, r, permissive, Method::Score, lambda2).accepted);
}

TEST_CASE("mapping filter rejects restricted variables bound to literals") {
  TriplestoreSchema s = make({TriplePattern(v("x"), u(":p"), v("y"))}, {v("x")});
  GraphPattern a, c;
  a.add(TriplePattern(v("a"), u(":p"), v("b")));
  c.add(TriplePattern(v("b"), u(":q"), u(":d")));  // ?b becomes a subject
  Rule r{"rz", a, c};
  LambdaUri lambda = fresh_lambda(s, RuleSet{{r}});

  Mapping m;
  m.bind(v("a"), lambda.uri);
  m.bind(v("b"), lit("1"));
  CHECK_FALSE(filter_mapping(m, r, s, Method::Score, lambda).accepted);
}

TEST_CASE("schema expansion grounds bindings and unpacks the reserved constant") {
  LambdaUri lambda = lambda_for(r2());
  Mapping m;
  m.bind(v("v1"), lambda.uri);
  m.bind(v("v2"), u(":TunnelA"));

  FreshVarGen fresh;
  fresh.reserve_all(s1().graph());
  TriplestoreSchema out =
      expand_schema(s1(), m, {v("v1"), v("v2")}, r2().consequent, lambda, fresh);
  CHECK(out.graph().size() == 5);
  CHECK(out.graph().patterns().back() ==
        TriplePattern(u(":TunnelA"), u("rdf:type"), u(":OffLimitArea")));
  CHECK(out.nolit() == s1().nolit());

  SUBCASE("a reserved-bound consequent variable becomes a fresh variable") {
    GraphPattern c;
    c.add(TriplePattern(v("v1"), u(":q"), v("v2")));
    TriplestoreSchema out2 = expand_schema(s1(), m, {v("v1"), v("v2")}, c, lambda, fresh);
    const TriplePattern& added = out2.graph().patterns().back();
    CHECK(added.subject.is_variable());
    CHECK(added.object == u(":TunnelA"));
    CHECK(out2.no_literal(added.subject));  // inherited from delta_m
  }

  SUBCASE("subsumed additions are dropped") {
    GraphPattern c;
    c.add(TriplePattern(v("v1"), u("sosa:hasResult"), lit("1")));
    TriplestoreSchema out3 = expand_schema(s1(), m, {v("v1")}, c, lambda, fresh);
    CHECK(out3 == s1());  // covered by the existing result pattern
  }
}

TEST_CASE("basic consequence of the running example") {
  TriplestoreSchema expected = make({s1().graph().patterns()[0], s1().graph().patterns()[1],
                                     s1().graph().patterns()[2], s1().graph().patterns()[3],
                                     TriplePattern(u(":TunnelA"), u("rdf:type"), u(":OffLimitArea"))},
                                    s1().nolit());
  for (Method method : {Method::Score, Method::Critical}) {
    CAPTURE(method_name(method));
    bool fired = false;
    TriplestoreSchema out = basic_consequence(s1(), r2(), method, {}, &fired);
    CHECK(fired);
    CHECK(schema_equiv(out, expected));

    fired = true;
    TriplestoreSchema noop = basic_consequence(s1(), r1(), method, {}, &fired);
    CHECK_FALSE(fired);
    CHECK(schema_equiv(noop, s1()));
  }
}

TEST_CASE("schema closure of the running example") {
  RuleSet rules{{r1(), r2()}};
  for (Method method : {Method::Score, Method::Critical}) {
    CAPTURE(method_name(method));
    ConsequenceReport report = schema_closure(s1(), rules, method);
    CHECK(report.output.graph().size() == 6);
    CHECK(schema_equiv(report.output, s1_closed()));
    CHECK(report.applicable.at("r1"));
    CHECK(report.applicable.at("r2"));
    CHECK(report.iterations >= 2);
    CHECK(report.method == method);

    // Re-closing is a no-op.
    ConsequenceReport again = schema_closure(report.output, rules, method);
    CHECK(schema_equiv(again.output, report.output));
  }
}

TEST_CASE("closure with no rules returns the schema") {
  ConsequenceReport report = schema_closure(s1(), RuleSet{}, Method::Score);
  CHECK(report.output == s1());
  CHECK(report.iterations == 1);
}

TEST_CASE("the two methods agree on the closure") {
  RuleSet rules{{r1(), r2()}};
  CHECK(schema_equiv(schema_closure(s1(), rules, Method::Score).output,
                     schema_closure(s1(), rules, Method::Critical).output));
}

TEST_CASE("faithful applicability report") {
  RuleSet both{{r1(), r2()}};
  auto verdict = applicability_report(s1(), both, Method::Score);
  CHECK(verdict == std::map<std::string, bool>{{"r1", true}, {"r2", true}});

  // Alone, the trespassing rule never fires: nothing derives rdf:type facts.
  RuleSet only_r1{{r1()}};
  auto alone = applicability_report(s1(), only_r1, Method::Score);
  CHECK(alone == std::map<std::string, bool>{{"r1", false}});

  CHECK(applicability_report(s1(), both, Method::Critical) == verdict);
}

TEST_CASE("iteration guard trips when the budget is too small") {
  RuleSet rules{{r1(), r2()}};
  ClosureOptions options;
  options.max_iterations = 1;  // the example needs three passes
  CHECK_THROWS_AS(schema_closure(s1(), rules, Method::Score, options), IterationLimitError);
}

TEST_CASE("an expired deadline aborts the closure") {
  // Enough work that the throttled poll fires: a chain schema with dozens of
  // patterns makes the critical instance large.
  GraphPattern g;
  for (int i = 0; i < 40; ++i)
    g.add(TriplePattern(v("s" + std::to_string(i)), u(":p" + std::to_string(i)),
                        v("o" + std::to_string(i))));
  TriplestoreSchema wide(std::move(g), {});

  GraphPattern a, c;
  a.add(TriplePattern(v("x"), u(":p0"), v("y")));
  c.add(TriplePattern(v("y"), u(":p1"), v("x")));
  RuleSet rules{{Rule{"r", a, c}}};

  ClosureOptions options;
  options.deadline = Deadline::after(std::chrono::milliseconds(0));
  CHECK_THROWS_AS(schema_closure(wide, rules, Method::Critical, options), TimeoutError);
}

TEST_CASE("fresh variable generator skips reserved names") {
  FreshVarGen fresh;
  fresh.reserve(v("g0"));
  fresh.reserve(v("g2"));
  CHECK(fresh.next() == v("g1"));
  CHECK(fresh.next() == v("g3"));
  CHECK(fresh.next() == v("g4"));
}
