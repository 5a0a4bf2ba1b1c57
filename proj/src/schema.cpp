#include "scon/schema.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace scon {

TriplestoreSchema::TriplestoreSchema(GraphPattern graph, std::set<Term> nolit,
                                     std::vector<std::string>* warnings)
    : graph_(std::move(graph)), nolit_(std::move(nolit)) {
  std::set<Term> seen;
  for (const auto& tp : graph_) {
    for (int pos : {1, 2, 3}) {
      const Term& t = tp.at(pos);
      if (!t.is_variable()) continue;
      if (!seen.insert(t).second)
        throw std::invalid_argument("variable " + to_string(t) +
                                    " occurs more than once in the schema");
      if (pos != 3 && nolit_.insert(t).second && warnings)
        warnings->push_back("variable " + to_string(t) +
                            " added to the no-literal set (subject/predicate position)");
    }
  }
  for (const auto& v : nolit_)
    if (!seen.count(v))
      throw std::invalid_argument("no-literal variable " + to_string(v) +
                                  " does not occur in the schema");
}

bool models_triple(const TriplePattern& tp, const std::set<Term>& nolit, const Triple& t) {
  for (int pos : {1, 2, 3}) {
    const Term& pat = tp.at(pos);
    const Term& val = t.at(pos);
    if (pat.is_constant()) {
      if (pat != val) return false;
    } else if (val.is_literal() && nolit.count(pat)) {
      return false;
    }
  }
  return true;
}

bool is_instance(const Graph& g, const TriplestoreSchema& s) {
  for (const auto& t : g) {
    bool modeled = false;
    for (const auto& tp : s.graph())
      if (models_triple(tp, s.nolit(), t)) {
        modeled = true;
        break;
      }
    if (!modeled) return false;
  }
  return true;
}

namespace {

Term fresh_uri(const std::set<Term>& avoid, int& counter) {
  for (;; ++counter) {
    Term t = Term::uri("fresh:u" + std::to_string(counter));
    if (!avoid.count(t)) {
      ++counter;
      return t;
    }
  }
}

Term fresh_literal(const std::set<Term>& avoid, int& counter) {
  for (;; ++counter) {
    Term t = Term::literal("fresh_l" + std::to_string(counter));
    if (!avoid.count(t)) {
      ++counter;
      return t;
    }
  }
}

}  // namespace

Triple generic_witness(const TriplePattern& tp, const std::set<Term>& nolit,
                       const std::set<Term>& avoid) {
  int uris = 0, lits = 0;
  Term out[3] = {tp.subject, tp.predicate, tp.object};
  for (int i = 0; i < 3; ++i) {
    if (!out[i].is_variable()) continue;
    if (i == 2 && !nolit.count(out[i]))
      out[i] = fresh_literal(avoid, lits);
    else
      out[i] = fresh_uri(avoid, uris);
  }
  return Triple(out[0], out[1], out[2]);
}

bool pattern_subsumes(const TriplePattern& q, const std::set<Term>& q_nolit,
                      const TriplePattern& p, const std::set<Term>& p_nolit) {
  std::set<Term> avoid;
  for (int pos : {1, 2, 3}) {
    if (p.at(pos).is_constant()) avoid.insert(p.at(pos));
    if (q.at(pos).is_constant()) avoid.insert(q.at(pos));
  }
  return models_triple(q, q_nolit, generic_witness(p, p_nolit, avoid));
}

bool schema_contains(const TriplestoreSchema& a, const TriplestoreSchema& b) {
  std::set<Term> avoid = pattern_constants(a.graph());
  for (const auto& c : pattern_constants(b.graph())) avoid.insert(c);

  for (const auto& tp : a.graph()) {
    Triple witness = generic_witness(tp, a.nolit(), avoid);
    bool modeled = false;
    for (const auto& other : b.graph())
      if (models_triple(other, b.nolit(), witness)) {
        modeled = true;
        break;
      }
    if (!modeled) return false;
  }
  return true;
}

bool schema_equiv(const TriplestoreSchema& a, const TriplestoreSchema& b) {
  return schema_contains(a, b) && schema_contains(b, a);
}

namespace {

// Sort key that treats all variable names alike, so canonical renaming does
// not depend on the input's variable names.
using PatternKey = std::tuple<int, std::string, int, std::string, int, std::string>;

PatternKey pattern_key(const TriplePattern& tp) {
  auto part = [](const Term& t) -> std::pair<int, std::string> {
    if (t.is_variable()) return {2, ""};
    return {t.is_literal() ? 1 : 0, t.text};
  };
  auto [ks, ts] = part(tp.subject);
  auto [kp, tp2] = part(tp.predicate);
  auto [ko, to] = part(tp.object);
  return {ks, ts, kp, tp2, ko, to};
}

}  // namespace

TriplestoreSchema normalize(const TriplestoreSchema& s) {
  std::vector<TriplePattern> sorted(s.graph().begin(), s.graph().end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return pattern_key(a) < pattern_key(b);
  });

  // Drop patterns subsumed by another pattern; on mutual subsumption the
  // earlier one survives.
  std::vector<bool> removed(sorted.size(), false);
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = 0; j < sorted.size(); ++j) {
      if (i == j || removed[j]) continue;
      if (!pattern_subsumes(sorted[j], s.nolit(), sorted[i], s.nolit())) continue;
      if (j < i || !pattern_subsumes(sorted[i], s.nolit(), sorted[j], s.nolit())) {
        removed[i] = true;
        break;
      }
    }
  }

  GraphPattern graph;
  std::set<Term> nolit;
  int counter = 0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (removed[i]) continue;
    Term out[3] = {sorted[i].subject, sorted[i].predicate, sorted[i].object};
    for (auto& t : out) {
      if (!t.is_variable()) continue;
      Term renamed = Term::var("g" + std::to_string(counter++));
      if (s.nolit().count(t)) nolit.insert(renamed);
      t = renamed;
    }
    graph.add(TriplePattern(out[0], out[1], out[2]));
  }
  return TriplestoreSchema(std::move(graph), std::move(nolit));
}

}  // namespace scon
