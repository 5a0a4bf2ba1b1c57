#ifndef SCON_SCHEMA_HPP
#define SCON_SCHEMA_HPP

#include <set>
#include <string>
#include <vector>

#include "scon/rdf.hpp"

namespace scon {

/// A triplestore schema: a set of triple patterns plus the no-literal
/// variable set. Every variable occurs at most once across all patterns;
/// subject/predicate variables always belong to the no-literal set.
class TriplestoreSchema {
 public:
  TriplestoreSchema() = default;

  /// Validates the schema invariants. Subject/predicate variables missing
  /// from nolit are auto-added; `warnings`, when given, records them.
  /// Throws std::invalid_argument on repeated variables or nolit entries
  /// outside vars(graph).
  TriplestoreSchema(GraphPattern graph, std::set<Term> nolit,
                    std::vector<std::string>* warnings = nullptr);

  const GraphPattern& graph() const { return graph_; }
  const std::set<Term>& nolit() const { return nolit_; }
  bool no_literal(const Term& var) const { return nolit_.count(var) != 0; }
  bool empty() const { return graph_.empty(); }

  bool operator==(const TriplestoreSchema&) const = default;

 private:
  GraphPattern graph_;
  std::set<Term> nolit_;
};

/// True iff some mapping m has m(tp) = t without binding a nolit variable to
/// a literal. tp must not repeat variables.
bool models_triple(const TriplePattern& tp, const std::set<Term>& nolit, const Triple& t);

/// True iff every triple of g is modeled by some pattern of s.
bool is_instance(const Graph& g, const TriplestoreSchema& s);

/// A representative instance triple of (tp, nolit): each variable position is
/// filled with a globally fresh constant not in `avoid` — a fresh URI for
/// nolit (and subject/predicate) variables, a fresh literal for unrestricted
/// object variables.
Triple generic_witness(const TriplePattern& tp, const std::set<Term>& nolit,
                       const std::set<Term>& avoid);

/// True iff every instance triple of (p, p_nolit) is an instance triple of
/// (q, q_nolit), decided by a single fresh-constant witness. Sound and
/// complete because patterns never repeat variables, so the value set of
/// each position is one of {c}, all URIs, URIs ∪ literals.
bool pattern_subsumes(const TriplePattern& q, const std::set<Term>& q_nolit,
                      const TriplePattern& p, const std::set<Term>& p_nolit);

/// Decides 𝕀(a) ⊆ 𝕀(b) via generic witnesses.
bool schema_contains(const TriplestoreSchema& a, const TriplestoreSchema& b);

/// Semantic equivalence: containment in both directions.
bool schema_equiv(const TriplestoreSchema& a, const TriplestoreSchema& b);

/// Removes patterns subsumed by another pattern of the same schema and
/// renames variables canonically (?g0, ?g1, ... in sorted pattern order).
/// The result is semantically equivalent to the input; idempotent.
TriplestoreSchema normalize(const TriplestoreSchema& s);

}  // namespace scon

#endif
