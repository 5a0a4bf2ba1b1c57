#ifndef SCON_TESTS_HELPERS_HPP
#define SCON_TESTS_HELPERS_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "scon/io.hpp"
#include "scon/rdf.hpp"
#include "scon/rules.hpp"
#include "scon/schema.hpp"

namespace scon::testing {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(SCON_FIXTURE_DIR) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Term u(const std::string& t) { return Term::uri(t); }
inline Term lit(const std::string& t) { return Term::literal(t); }
inline Term v(const std::string& t) { return Term::var(t); }

// The running example, built in code so core tests do not depend on the
// parser.
inline TriplestoreSchema s1() {
  GraphPattern g;
  g.add(TriplePattern(v("v1"), u("sosa:observedProperty"), u(":CO_Danger")));
  g.add(TriplePattern(v("v2"), u("sosa:observedProperty"), u(":WorkerTag")));
  g.add(TriplePattern(v("v3"), u("sosa:hasFeatureOfInterest"), u(":TunnelA")));
  g.add(TriplePattern(v("v5"), u("sosa:hasResult"), v("v4")));
  return TriplestoreSchema(std::move(g), {v("v1"), v("v2"), v("v3"), v("v5")});
}

inline Rule r1() {
  GraphPattern a, c;
  a.add(TriplePattern(v("v1"), u("sosa:observedProperty"), u(":WorkerTag")));
  a.add(TriplePattern(v("v1"), u("sosa:hasFeatureOfInterest"), v("v2")));
  a.add(TriplePattern(v("v1"), u("sosa:hasResult"), v("v3")));
  a.add(TriplePattern(v("v2"), u("rdf:type"), u(":OffLimitArea")));
  c.add(TriplePattern(v("v2"), u("rdf:type"), u(":TrespassedArea")));
  return Rule{"r1", std::move(a), std::move(c)};
}

inline Rule r2() {
  GraphPattern a, c;
  a.add(TriplePattern(v("v1"), u("sosa:observedProperty"), u(":CO_Danger")));
  a.add(TriplePattern(v("v1"), u("sosa:hasFeatureOfInterest"), v("v2")));
  a.add(TriplePattern(v("v1"), u("sosa:hasResult"), lit("1")));
  c.add(TriplePattern(v("v2"), u("rdf:type"), u(":OffLimitArea")));
  return Rule{"r2", std::move(a), std::move(c)};
}

inline Graph i1() {
  Graph g;
  g.insert(Triple(u(":o1"), u("sosa:observedProperty"), u(":CO_Danger")));
  g.insert(Triple(u(":o1"), u("sosa:hasFeatureOfInterest"), u(":TunnelA")));
  g.insert(Triple(u(":o1"), u("sosa:hasResult"), lit("1")));
  g.insert(Triple(u(":o2"), u("sosa:observedProperty"), u(":WorkerTag")));
  g.insert(Triple(u(":o2"), u("sosa:hasFeatureOfInterest"), u(":TunnelA")));
  g.insert(Triple(u(":o2"), u("sosa:hasResult"), u(":John")));
  return g;
}

}  // namespace scon::testing

#endif
