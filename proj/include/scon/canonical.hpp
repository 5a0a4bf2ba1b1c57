#ifndef SCON_CANONICAL_HPP
#define SCON_CANONICAL_HPP

#include "scon/deadline.hpp"
#include "scon/rdf.hpp"
#include "scon/rules.hpp"
#include "scon/schema.hpp"

namespace scon {

/// The reserved fresh URI used by both canonical instances. Drawn from the
/// "lambda:" namespace with a collision-bump counter.
struct LambdaUri {
  Term uri;
};

/// Smallest lambda:l<k> colliding with nothing in const(S^G) ∪ consts.
LambdaUri fresh_lambda(const TriplestoreSchema& s, const std::set<Term>& consts);

/// Lambda fresh for a schema and every rule of a set (one lambda per
/// closure run).
LambdaUri fresh_lambda(const TriplestoreSchema& s, const RuleSet& rules);

/// The critical instance: every schema pattern instantiated with all
/// constants of const(S^G) ∪ const(A) ∪ {lambda} — URIs anywhere, literals
/// only in object positions whose variable is outside the no-literal set.
Graph critical_instance(const TriplestoreSchema& s, const Rule& r, const LambdaUri& lambda,
                        const Deadline& deadline = {});

/// The sandbox graph: one triple per schema pattern, variables replaced by
/// lambda. A subset of every critical instance and an instance of s.
Graph sandbox_graph(const TriplestoreSchema& s, const LambdaUri& lambda);

/// Q(A): per antecedent triple, the 8 variants obtained by replacing any
/// subset of positions with lambda. Semantically a union of conjunctive
/// queries with one variant chosen per triple.
struct UcqRewriting {
  std::vector<std::vector<TriplePattern>> per_triple;  // parallel to the antecedent
  std::set<Term> query_vars;                           // vars(A)
};

/// Variant order is fixed: positions are toggled left-to-right with the
/// original element before lambda, so index 0 is the original triple and
/// index 7 is all-lambda.
UcqRewriting rewrite_antecedent(const GraphPattern& antecedent, const LambdaUri& lambda);

/// Evaluates the UCQ over g, keeping only mappings total on query_vars.
std::vector<Mapping> evaluate_ucq(const UcqRewriting& q, const Graph& g,
                                  const Deadline& deadline = {});

}  // namespace scon

#endif
