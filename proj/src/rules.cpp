#include "scon/rules.hpp"

namespace scon {

std::vector<std::string> validate_rule(const Rule& r) {
  std::vector<std::string> violations;
  if (r.antecedent.empty()) violations.push_back("empty antecedent");
  if (r.consequent.empty()) violations.push_back("empty consequent");

  auto antecedent_vars = pattern_variables(r.antecedent);
  std::set<Term> seen;
  for (const auto& tp : r.consequent)
    for (int pos : {1, 2, 3}) {
      const Term& t = tp.at(pos);
      if (!t.is_variable()) continue;
      if (!antecedent_vars.count(t))
        violations.push_back("unsafe variable " + to_string(t) + " in consequent");
      if (!seen.insert(t).second)
        violations.push_back("variable " + to_string(t) + " repeated in consequent");
    }
  return violations;
}

bool rule_valid(const Rule& r) { return validate_rule(r).empty(); }

Graph apply_rule_once(const Rule& r, const Graph& instance, ApplyStats* stats) {
  Graph out = instance;
  for (const Mapping& m : evaluate_bgp(r.antecedent, instance)) {
    auto instantiated = try_apply_substitution(VarSubstitution(m), r.consequent);
    if (!instantiated || !is_valid_rdf_graph(*instantiated)) {
      if (stats) ++stats->skipped_invalid;
      continue;
    }
    for (const auto& t : to_graph(*instantiated)) out.insert(t);
  }
  return out;
}

Graph closure_instance(const Graph& instance, const RuleSet& rules, ApplyStats* stats) {
  Graph current = instance;
  for (;;) {
    Graph next = current;
    for (const auto& r : rules.rules) {
      Graph step = apply_rule_once(r, current, stats);
      for (const auto& t : step) next.insert(t);
    }
    if (next.size() == current.size()) return current;
    current = std::move(next);
  }
}

}  // namespace scon
