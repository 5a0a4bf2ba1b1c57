#include "scon/canonical.hpp"

#include <algorithm>

namespace scon {

namespace {

LambdaUri bump_lambda(const std::set<Term>& taken) {
  for (int k = 0;; ++k) {
    Term t = Term::uri("lambda:l" + std::to_string(k));
    if (!taken.count(t)) return LambdaUri{t};
  }
}

}  // namespace

LambdaUri fresh_lambda(const TriplestoreSchema& s, const std::set<Term>& consts) {
  std::set<Term> taken = pattern_constants(s.graph());
  taken.insert(consts.begin(), consts.end());
  return bump_lambda(taken);
}

LambdaUri fresh_lambda(const TriplestoreSchema& s, const RuleSet& rules) {
  std::set<Term> taken = pattern_constants(s.graph());
  for (const auto& r : rules.rules) {
    for (const auto& c : pattern_constants(r.antecedent)) taken.insert(c);
    for (const auto& c : pattern_constants(r.consequent)) taken.insert(c);
  }
  return bump_lambda(taken);
}

Graph critical_instance(const TriplestoreSchema& s, const Rule& r, const LambdaUri& lambda,
                        const Deadline& deadline) {
  std::set<Term> pool = pattern_constants(s.graph());
  for (const auto& c : pattern_constants(r.antecedent)) pool.insert(c);
  pool.insert(lambda.uri);

  std::vector<Term> uris, all;
  for (const auto& c : pool) {
    all.push_back(c);
    if (c.is_uri()) uris.push_back(c);
  }

  Graph out;
  for (const auto& tp : s.graph()) {
    auto fillers = [&](int pos) -> std::vector<Term> {
      const Term& t = tp.at(pos);
      if (t.is_constant()) return {t};
      if (pos == 3 && !s.no_literal(t)) return all;
      return uris;
    };
    for (const auto& subj : fillers(1))
      for (const auto& pred : fillers(2))
        for (const auto& obj : fillers(3)) {
          deadline.poll();
          out.insert(Triple(subj, pred, obj));
        }
  }
  return out;
}

Graph sandbox_graph(const TriplestoreSchema& s, const LambdaUri& lambda) {
  Graph out;
  for (const auto& tp : s.graph()) {
    auto fill = [&](const Term& t) { return t.is_variable() ? lambda.uri : t; };
    out.insert(Triple(fill(tp.subject), fill(tp.predicate), fill(tp.object)));
  }
  return out;
}

UcqRewriting rewrite_antecedent(const GraphPattern& antecedent, const LambdaUri& lambda) {
  UcqRewriting out;
  out.query_vars = pattern_variables(antecedent);
  for (const auto& tp : antecedent) {
    std::vector<TriplePattern> variants;
    variants.reserve(8);
    for (const Term& subj : {tp.subject, lambda.uri})
      for (const Term& pred : {tp.predicate, lambda.uri})
        for (const Term& obj : {tp.object, lambda.uri})
          variants.emplace_back(subj, pred, obj);
    out.per_triple.push_back(std::move(variants));
  }
  return out;
}

std::vector<Mapping> evaluate_ucq(const UcqRewriting& q, const Graph& g,
                                  const Deadline& deadline) {
  // Per antecedent triple: union of the matches of its 8 variants. Joining
  // these unions enumerates exactly the 8^|A| conjunct combinations.
  std::vector<std::vector<Mapping>> per_triple;
  for (const auto& variants : q.per_triple) {
    std::vector<Mapping> matches;
    for (const auto& v : variants) {
      deadline.poll();
      auto found = match_pattern(v, g);
      matches.insert(matches.end(), std::make_move_iterator(found.begin()),
                     std::make_move_iterator(found.end()));
    }
    std::sort(matches.begin(), matches.end());
    matches.erase(std::unique(matches.begin(), matches.end()), matches.end());
    per_triple.push_back(std::move(matches));
  }

  std::sort(per_triple.begin(), per_triple.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<Mapping> joined;
  joined.emplace_back();
  for (const auto& matches : per_triple) {
    std::vector<Mapping> next;
    for (const Mapping& left : joined)
      for (const Mapping& right : matches) {
        deadline.poll();
        if (left.compatible_with(right)) next.push_back(left.merged_with(right));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    joined = std::move(next);
    if (joined.empty()) return {};
  }

  // Conjuncts that drop a variable yield partial mappings; only mappings
  // total on vars(A) survive.
  std::vector<Mapping> total;
  for (auto& m : joined) {
    if (m.size() != q.query_vars.size()) continue;
    total.push_back(std::move(m));
  }
  return total;
}

}  // namespace scon
