#ifndef SCON_RULES_HPP
#define SCON_RULES_HPP

#include <string>
#include <vector>

#include "scon/rdf.hpp"

namespace scon {

/// An inference rule: antecedent and consequent graph patterns.
struct Rule {
  std::string name;
  GraphPattern antecedent;
  GraphPattern consequent;
};

struct RuleSet {
  std::vector<Rule> rules;

  const Rule* find(const std::string& name) const {
    for (const auto& r : rules)
      if (r.name == name) return &r;
    return nullptr;
  }
};

/// Every violated rule invariant, in a fixed order: nonempty sides, safety
/// (vars(C) ⊆ vars(A)), and single occurrence of each consequent variable.
std::vector<std::string> validate_rule(const Rule& r);
bool rule_valid(const Rule& r);

/// Counts m(C) instantiations skipped because they would place a literal in
/// subject or predicate position.
struct ApplyStats {
  size_t skipped_invalid = 0;
};

/// One application of r to I: adds m(C) for every antecedent match m whose
/// instantiation is a valid RDF graph. Invalid instantiations are skipped.
Graph apply_rule_once(const Rule& r, const Graph& instance, ApplyStats* stats = nullptr);

/// Least fixpoint of applying all rules (naive iteration). Terminates since
/// rules introduce no new constants.
Graph closure_instance(const Graph& instance, const RuleSet& rules, ApplyStats* stats = nullptr);

}  // namespace scon

#endif
