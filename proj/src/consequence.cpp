#include "scon/consequence.hpp"

#include <optional>

namespace scon {

const char* method_name(Method m) { return m == Method::Score ? "score" : "critical"; }

std::vector<Mapping> compute_mappings(const TriplestoreSchema& s, const Rule& r, Method method,
                                      const LambdaUri& lambda, const Deadline& deadline) {
  if (method == Method::Critical)
    return evaluate_bgp(r.antecedent, critical_instance(s, r, lambda, deadline));
  return evaluate_ucq(rewrite_antecedent(r.antecedent, lambda), sandbox_graph(s, lambda),
                      deadline);
}

namespace {

std::set<Term> initial_delta(const Rule& r) {
  std::set<Term> delta;
  for (const GraphPattern* side : {&r.antecedent, &r.consequent})
    for (const auto& tp : *side)
      for (int pos : {1, 2}) {
        const Term& t = tp.at(pos);
        if (t.is_variable()) delta.insert(t);
      }
  return delta;
}

// Ground image of a pattern under a total mapping; nullopt if the image is
// not a valid RDF triple.
std::optional<Triple> ground_image(const TriplePattern& tp, const Mapping& m) {
  VarSubstitution s(m);
  Term subj = s.apply(tp.subject);
  Term pred = s.apply(tp.predicate);
  Term obj = s.apply(tp.object);
  if (!subj.is_uri() || !pred.is_uri() || obj.is_variable()) return std::nullopt;
  return Triple(std::move(subj), std::move(pred), std::move(obj));
}

FilterOutcome filter_with_context(const Mapping& m, const Rule& r, const TriplestoreSchema& s,
                                  Method method, const LambdaUri& lambda, const Graph* sandbox,
                                  const UcqRewriting* rewriting) {
  std::set<Term> delta = initial_delta(r);
  const auto& schema_patterns = s.graph().patterns();

  for (size_t i = 0; i < r.antecedent.size(); ++i) {
    const TriplePattern& t_a = r.antecedent.patterns()[i];

    // Schema triples modeling the image of t_a (or of one of its rewritings)
    // in the canonical instance under m: the patterns that enabled the match.
    std::set<size_t> enabling;
    auto collect = [&](const Triple& ground) {
      for (size_t j = 0; j < schema_patterns.size(); ++j)
        if (models_triple(schema_patterns[j], s.nolit(), ground)) enabling.insert(j);
    };
    if (method == Method::Score) {
      for (const auto& variant : rewriting->per_triple[i]) {
        auto ground = ground_image(variant, m);
        if (ground && sandbox->contains(*ground)) collect(*ground);
      }
    } else {
      auto ground = ground_image(t_a, m);
      if (ground) collect(*ground);
    }

    auto object_allows_literal = [&](size_t j) {
      const Term& so = schema_patterns[j].object;
      return so.is_variable() && !s.no_literal(so);
    };

    const Term& obj = t_a.object;
    const Term* value = obj.is_variable() ? m.find(obj) : &obj;
    if (!value) continue;  // mappings here are total on vars(A)

    if (value->is_literal()) {
      // A literal object is legal only if some enabling pattern carries the
      // same literal or a literal-allowing variable in object position.
      bool allowed = false;
      for (size_t j : enabling)
        if (schema_patterns[j].object == *value || object_allows_literal(j)) {
          allowed = true;
          break;
        }
      if (!allowed) return FilterOutcome{false, {}};
    } else if (obj.is_variable() && *value == lambda.uri) {
      // A lambda-bound object variable stands for "anything this position
      // admits"; without a literal-allowing enabling pattern it is
      // restricted to URIs.
      bool allows = false;
      for (size_t j : enabling)
        if (object_allows_literal(j)) {
          allows = true;
          break;
        }
      if (!allows) delta.insert(obj);
    }
  }

  for (const auto& v : delta) {
    const Term* bound = m.find(v);
    if (bound && bound->is_literal()) return FilterOutcome{false, {}};
  }
  return FilterOutcome{true, std::move(delta)};
}

}  // namespace

FilterOutcome filter_mapping(const Mapping& m, const Rule& r, const TriplestoreSchema& s,
                             Method method, const LambdaUri& lambda) {
  if (method == Method::Score) {
    Graph sandbox = sandbox_graph(s, lambda);
    UcqRewriting rewriting = rewrite_antecedent(r.antecedent, lambda);
    return filter_with_context(m, r, s, method, lambda, &sandbox, &rewriting);
  }
  return filter_with_context(m, r, s, method, lambda, nullptr, nullptr);
}

TriplestoreSchema expand_schema(const TriplestoreSchema& acc, const Mapping& m,
                                const std::set<Term>& delta_m, const GraphPattern& consequent,
                                const LambdaUri& lambda, FreshVarGen& fresh) {
  // s^m: non-lambda bindings keep their constant; lambda bindings unpack to
  // fresh variables. Consequent variables each occur once, so fresh names
  // never repeat within the added patterns.
  VarSubstitution unpack;
  std::set<Term> fresh_nolit;
  for (const auto& v : pattern_variables(consequent)) {
    const Term* value = m.find(v);
    if (!value) continue;  // safety guarantees this does not happen
    if (*value == lambda.uri) {
      Term star = fresh.next();
      unpack.bind(v, star);
      if (delta_m.count(v)) fresh_nolit.insert(star);
    } else {
      unpack.bind(v, *value);
    }
  }

  GraphPattern added = apply_substitution(unpack, consequent);

  GraphPattern graph = acc.graph();
  std::set<Term> nolit = acc.nolit();
  for (const auto& np : added) {
    std::set<Term> np_nolit;
    for (int pos : {1, 2, 3}) {
      const Term& t = np.at(pos);
      if (t.is_variable() && (pos != 3 || fresh_nolit.count(t))) np_nolit.insert(t);
    }

    bool subsumed = false;
    for (const auto& existing : acc.graph())
      if (pattern_subsumes(existing, acc.nolit(), np, np_nolit)) {
        subsumed = true;
        break;
      }
    if (subsumed) continue;

    graph.add(np);
    for (const auto& v : np_nolit) nolit.insert(v);
  }
  return TriplestoreSchema(std::move(graph), std::move(nolit));
}

namespace {

TriplestoreSchema basic_consequence_with(const TriplestoreSchema& s, const Rule& r, Method method,
                                         const LambdaUri& lambda, FreshVarGen& fresh,
                                         const Deadline& deadline, bool* fired) {
  if (fired) *fired = false;

  std::optional<Graph> sandbox;
  std::optional<UcqRewriting> rewriting;
  if (method == Method::Score) {
    sandbox = sandbox_graph(s, lambda);
    rewriting = rewrite_antecedent(r.antecedent, lambda);
  }

  TriplestoreSchema acc = s;
  for (const Mapping& m : compute_mappings(s, r, method, lambda, deadline)) {
    deadline.poll();
    FilterOutcome outcome =
        filter_with_context(m, r, s, method, lambda,
                            sandbox ? &*sandbox : nullptr, rewriting ? &*rewriting : nullptr);
    if (!outcome.accepted) continue;
    if (fired) *fired = true;
    acc = expand_schema(acc, m, outcome.delta_m, r.consequent, lambda, fresh);
  }
  return acc;
}

FreshVarGen seeded_generator(const TriplestoreSchema& s, const RuleSet& rules) {
  FreshVarGen fresh;
  fresh.reserve_all(s.graph());
  for (const auto& r : rules.rules) {
    fresh.reserve_all(r.antecedent);
    fresh.reserve_all(r.consequent);
  }
  return fresh;
}

size_t default_iteration_guard(const TriplestoreSchema& s, const RuleSet& rules) {
  std::set<Term> consts = pattern_constants(s.graph());
  for (const auto& r : rules.rules) {
    for (const auto& c : pattern_constants(r.antecedent)) consts.insert(c);
    for (const auto& c : pattern_constants(r.consequent)) consts.insert(c);
  }
  size_t base = 1 + consts.size();
  return 10 * (s.graph().size() + rules.rules.size()) * base * base * base;
}

}  // namespace

TriplestoreSchema basic_consequence(const TriplestoreSchema& s, const Rule& r, Method method,
                                    const Deadline& deadline, bool* fired) {
  RuleSet single{{r}};
  LambdaUri lambda = fresh_lambda(s, single);
  FreshVarGen fresh = seeded_generator(s, single);
  return basic_consequence_with(s, r, method, lambda, fresh, deadline, fired);
}

ConsequenceReport schema_closure(const TriplestoreSchema& s, const RuleSet& rules, Method method,
                                 const ClosureOptions& options) {
  LambdaUri lambda = fresh_lambda(s, rules);
  FreshVarGen fresh = seeded_generator(s, rules);
  size_t guard = options.max_iterations ? options.max_iterations
                                        : default_iteration_guard(s, rules);

  ConsequenceReport report;
  report.method = method;
  for (const auto& r : rules.rules) report.applicable[r.name] = false;

  TriplestoreSchema current = s;
  for (;;) {
    TriplestoreSchema next = current;
    for (const auto& r : rules.rules) {
      bool fired = false;
      next = basic_consequence_with(next, r, method, lambda, fresh, options.deadline, &fired);
      if (fired) report.applicable[r.name] = true;
    }
    ++report.iterations;
    // Syntactic equality decides the semantic fixpoint here: expansion only
    // adds patterns, and each addition survived a subsumption check against
    // every pattern already present, so a grown schema is never equivalent
    // to its predecessor.
    if (next == current) break;
    if (report.iterations > guard)
      throw IterationLimitError("schema closure exceeded the iteration guard (" +
                                std::to_string(guard) + ")");
    current = std::move(next);
  }
  report.output = std::move(current);
  return report;
}

std::map<std::string, bool> applicability_report(const TriplestoreSchema& s, const RuleSet& rules,
                                                 Method method, const ClosureOptions& options) {
  std::map<std::string, bool> out;
  for (const auto& r : rules.rules) {
    RuleSet others;
    for (const auto& other : rules.rules)
      if (other.name != r.name) others.rules.push_back(other);

    TriplestoreSchema closed = schema_closure(s, others, method, options).output;
    RuleSet single{{r}};
    LambdaUri lambda = fresh_lambda(closed, single);

    bool applicable = false;
    for (const Mapping& m : compute_mappings(closed, r, method, lambda, options.deadline))
      if (filter_mapping(m, r, closed, method, lambda).accepted) {
        applicable = true;
        break;
      }
    out[r.name] = applicable;
  }
  return out;
}

}  // namespace scon
