#ifndef SCON_CONSEQUENCE_HPP
#define SCON_CONSEQUENCE_HPP

#include <cstddef>
#include <map>
#include <string>

#include "scon/canonical.hpp"
#include "scon/deadline.hpp"
#include "scon/rdf.hpp"
#include "scon/rules.hpp"
#include "scon/schema.hpp"

namespace scon {

enum class Method { Score, Critical };

const char* method_name(Method m);

/// Fresh variable names of the form ?g<k>, skipping any name already in use.
class FreshVarGen {
 public:
  FreshVarGen() = default;
  void reserve(const Term& var) { used_.insert(var.text); }
  void reserve_all(const GraphPattern& p) {
    for (const auto& v : pattern_variables(p)) reserve(v);
  }

  Term next() {
    for (;; ++counter_) {
      std::string name = "g" + std::to_string(counter_);
      if (used_.insert(name).second) {
        ++counter_;
        return Term::var(name);
      }
    }
  }

 private:
  std::set<std::string> used_;
  size_t counter_ = 0;
};

/// Result of filtering one mapping.
struct FilterOutcome {
  bool accepted = false;
  std::set<Term> delta_m;  // meaningful only when accepted
};

struct ClosureOptions {
  /// 0 selects the default guard 10*(|S^G|+|R|)*(1+|consts|)^3.
  size_t max_iterations = 0;
  Deadline deadline;
};

/// Raised when the fixpoint iteration guard trips; indicates a bug, not
/// expected behavior.
struct IterationLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConsequenceReport {
  TriplestoreSchema output;
  std::map<std::string, bool> applicable;  // rule fired during this closure
  size_t iterations = 0;
  Method method = Method::Score;
};

/// Antecedent mappings over the canonical instance: BGP evaluation on the
/// critical instance, or UCQ evaluation on the sandbox graph.
std::vector<Mapping> compute_mappings(const TriplestoreSchema& s, const Rule& r, Method method,
                                      const LambdaUri& lambda, const Deadline& deadline = {});

/// Literal filtering of one mapping: builds the temporary no-literal set
/// delta_m and rejects mappings that would bind a restricted variable to a
/// literal or place a literal where no schema pattern allows one.
FilterOutcome filter_mapping(const Mapping& m, const Rule& r, const TriplestoreSchema& s,
                             Method method, const LambdaUri& lambda);

/// Adds s^m(C) to the accumulating schema: non-lambda bindings substitute
/// their constant, lambda bindings unpack to fresh variables. New patterns
/// subsumed by an existing pattern are dropped; fresh variables inherited
/// from delta_m join the no-literal set.
TriplestoreSchema expand_schema(const TriplestoreSchema& acc, const Mapping& m,
                                const std::set<Term>& delta_m, const GraphPattern& consequent,
                                const LambdaUri& lambda, FreshVarGen& fresh);

/// The basic schema consequence r(S) by either method. `fired`, when given,
/// is set iff at least one mapping survived filtering.
TriplestoreSchema basic_consequence(const TriplestoreSchema& s, const Rule& r, Method method,
                                    const Deadline& deadline = {}, bool* fired = nullptr);

/// con(S,R): iterates basic consequences over all rules until the schema is
/// semantically stable. The `applicable` flags report rules observed firing
/// during this joint closure — an over-approximation of the paper's
/// applicability notion (see applicability_report for the faithful one).
ConsequenceReport schema_closure(const TriplestoreSchema& s, const RuleSet& rules, Method method,
                                 const ClosureOptions& options = {});

/// Faithful applicability: r is applicable iff some mapping over the closure
/// of S under R minus r survives filtering. Computes |R| closures.
std::map<std::string, bool> applicability_report(const TriplestoreSchema& s, const RuleSet& rules,
                                                 Method method,
                                                 const ClosureOptions& options = {});

}  // namespace scon

#endif
