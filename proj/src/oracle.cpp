#include "scon/oracle.hpp"

#include <algorithm>

namespace scon {

std::vector<Triple> instance_universe(const TriplestoreSchema& s, const EnumBounds& b,
                                      const std::set<Term>& extra) {
  std::set<Term> pool = pattern_constants(s.graph());
  pool.insert(extra.begin(), extra.end());
  for (size_t i = 0; i < b.domain_uris; ++i) {
    for (int bump = 0;; ++bump) {
      Term t = Term::uri("oracle:u" + std::to_string(i) + (bump ? "_" + std::to_string(bump) : ""));
      if (pool.insert(t).second) break;
    }
  }
  for (size_t i = 0; i < b.domain_literals; ++i) {
    for (int bump = 0;; ++bump) {
      Term t = Term::literal("oracle_l" + std::to_string(i) +
                             (bump ? "_" + std::to_string(bump) : ""));
      if (pool.insert(t).second) break;
    }
  }

  std::vector<Term> uris, all;
  for (const auto& c : pool) {
    all.push_back(c);
    if (c.is_uri()) uris.push_back(c);
  }

  std::set<Triple> universe;
  for (const auto& tp : s.graph()) {
    auto fillers = [&](int pos) -> std::vector<Term> {
      const Term& t = tp.at(pos);
      if (t.is_constant()) return {t};
      if (pos == 3 && !s.no_literal(t)) return all;
      return uris;
    };
    for (const auto& subj : fillers(1))
      for (const auto& pred : fillers(2))
        for (const auto& obj : fillers(3)) universe.insert(Triple(subj, pred, obj));
  }
  return {universe.begin(), universe.end()};
}

namespace {

// Emits all subsets of `universe` of size <= max_size, smallest first.
bool emit_subsets(const std::vector<Triple>& universe, size_t max_size,
                  const std::function<bool(const Graph&)>& consumer, size_t& emitted) {
  std::vector<size_t> chosen;
  // Iterative enumeration by subset size keeps the empty instance first.
  std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t remaining) -> bool {
    Graph g;
    for (size_t idx : chosen) g.insert(universe[idx]);
    ++emitted;
    if (!consumer(g)) return false;
    if (remaining == 0) return true;
    for (size_t i = start; i < universe.size(); ++i) {
      chosen.push_back(i);
      bool keep_going = rec(i + 1, remaining - 1);
      chosen.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  return rec(0, max_size);
}

}  // namespace

size_t enumerate_instances(const TriplestoreSchema& s, const EnumBounds& b,
                           const std::function<bool(const Graph&)>& consumer,
                           const std::set<Term>& extra) {
  size_t emitted = 0;
  emit_subsets(instance_universe(s, b, extra), b.max_triples, consumer, emitted);
  return emitted;
}

bool check_theorem1(const TriplestoreSchema& s, const Rule& r) {
  return schema_equiv(basic_consequence(s, r, Method::Score),
                      basic_consequence(s, r, Method::Critical));
}

Theorem2Report check_theorem2(const TriplestoreSchema& s, const Rule& r, const EnumBounds& b) {
  TriplestoreSchema out = basic_consequence(s, r, Method::Score);

  std::set<TriplePattern> original(s.graph().begin(), s.graph().end());
  std::vector<TriplePattern> added;
  for (const auto& tp : out.graph())
    if (!original.count(tp)) added.push_back(tp);

  EnumBounds bounds = b;
  bounds.max_triples = std::min(b.max_triples, r.antecedent.size());

  Theorem2Report report;
  report.sound = true;
  std::vector<bool> witnessed(added.size(), false);

  std::set<Term> rule_consts = pattern_constants(r.antecedent);
  enumerate_instances(
      s, bounds,
      [&](const Graph& instance) {
        Graph derived = apply_rule_once(r, instance);
        for (const auto& t : derived) {
          if (!is_instance(Graph({t}), out)) {
            report.sound = false;
            if (!report.counterexample)
              report.counterexample = "derived triple not modeled: " + to_string(t);
            return false;
          }
          if (instance.contains(t)) continue;
          for (size_t i = 0; i < added.size(); ++i)
            if (!witnessed[i] && models_triple(added[i], out.nolit(), t)) witnessed[i] = true;
        }
        return true;
      },
      rule_consts);

  report.tight = true;
  for (size_t i = 0; i < added.size(); ++i)
    if (!witnessed[i]) {
      report.tight = false;
      if (!report.counterexample)
        report.counterexample = "pattern without derivation witness: " + to_string(added[i]);
      break;
    }
  return report;
}

}  // namespace scon
