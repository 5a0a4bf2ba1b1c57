#ifndef SCON_ORACLE_HPP
#define SCON_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>

#include "scon/consequence.hpp"
#include "scon/rules.hpp"
#include "scon/schema.hpp"

namespace scon {

/// Bounds for brute-force instance enumeration.
struct EnumBounds {
  size_t domain_uris = 2;
  size_t domain_literals = 1;
  size_t max_triples = 4;
};

/// Streams every instance of s (no duplicates) whose constants come from
/// const(S^G), `extra` constants, and the bounded fresh pools, and whose size
/// is at most max_triples. The consumer returns false to stop early.
/// Returns the number of instances emitted.
size_t enumerate_instances(const TriplestoreSchema& s, const EnumBounds& b,
                           const std::function<bool(const Graph&)>& consumer,
                           const std::set<Term>& extra = {});

/// The ground-triple universe the enumeration draws from.
std::vector<Triple> instance_universe(const TriplestoreSchema& s, const EnumBounds& b,
                                      const std::set<Term>& extra = {});

/// Executable form of the score/critical equivalence claim: the two basic
/// consequences are semantically equivalent schemas.
bool check_theorem1(const TriplestoreSchema& s, const Rule& r);

struct Theorem2Report {
  bool sound = false;
  bool tight = false;
  std::optional<std::string> counterexample;
};

/// Bounded soundness/tightness check of the score consequence against
/// instance-level rule application. Soundness: every triple derivable by one
/// application of r on an enumerated instance is modeled by score(S,r).
/// Tightness: every pattern added by score(S,r) models some derived triple.
/// The enumeration universe includes the rule's constants; instances larger
/// than |A| are skipped, since one application of r consumes at most |A|
/// triples and larger instances cannot change either verdict.
Theorem2Report check_theorem2(const TriplestoreSchema& s, const Rule& r, const EnumBounds& b);

}  // namespace scon

#endif
