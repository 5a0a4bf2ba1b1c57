#include "scon/rdf.hpp"

#include <algorithm>
#include <unordered_map>

namespace scon {

std::string to_string(const Term& t) {
  switch (t.kind) {
    case TermKind::Uri:
      return t.text;
    case TermKind::Literal: {
      std::string out = "\"";
      for (char c : t.text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
      }
      out.push_back('"');
      return out;
    }
    case TermKind::Variable:
      return "?" + t.text;
  }
  return t.text;
}

std::string to_string(const Triple& t) {
  return to_string(t.subject) + " " + to_string(t.predicate) + " " + to_string(t.object);
}

std::string to_string(const TriplePattern& tp) {
  return to_string(tp.subject) + " " + to_string(tp.predicate) + " " + to_string(tp.object);
}

std::string to_string(const Mapping& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : m) {
    if (!first) out += ", ";
    first = false;
    out += "?" + name + " -> " + to_string(value);
  }
  return out + "}";
}

std::pair<std::set<Term>, std::set<Term>> term_sets(const GraphPattern& p) {
  std::set<Term> vars, consts;
  for (const auto& tp : p)
    for (int pos : {1, 2, 3}) {
      const Term& t = tp.at(pos);
      (t.is_variable() ? vars : consts).insert(t);
    }
  return {std::move(vars), std::move(consts)};
}

std::set<Term> pattern_variables(const GraphPattern& p) { return term_sets(p).first; }
std::set<Term> pattern_constants(const GraphPattern& p) { return term_sets(p).second; }

bool Mapping::compatible_with(const Mapping& o) const {
  const Mapping& small = size() <= o.size() ? *this : o;
  const Mapping& large = size() <= o.size() ? o : *this;
  for (const auto& [name, value] : small) {
    auto it = large.bindings_.find(name);
    if (it != large.bindings_.end() && it->second != value) return false;
  }
  return true;
}

Mapping Mapping::merged_with(const Mapping& o) const {
  Mapping out = *this;
  for (const auto& [name, value] : o) out.bindings_.insert_or_assign(name, value);
  return out;
}

GraphPattern apply_substitution(const VarSubstitution& s, const GraphPattern& p) {
  GraphPattern out;
  for (const auto& tp : p) {
    Term subj = s.apply(tp.subject);
    Term pred = s.apply(tp.predicate);
    Term obj = s.apply(tp.object);
    if (subj.is_literal() || pred.is_literal())
      throw SubstitutionError("substitution places a literal in subject/predicate position: " +
                              to_string(tp));
    out.add(TriplePattern(std::move(subj), std::move(pred), std::move(obj)));
  }
  return out;
}

std::optional<GraphPattern> try_apply_substitution(const VarSubstitution& s,
                                                   const GraphPattern& p) {
  try {
    return apply_substitution(s, p);
  } catch (const SubstitutionError&) {
    return std::nullopt;
  }
}

bool is_valid_rdf_graph(const GraphPattern& p) {
  for (const auto& tp : p) {
    if (!tp.subject.is_uri() || !tp.predicate.is_uri()) return false;
    if (tp.object.is_variable()) return false;
  }
  return true;
}

Graph to_graph(const GraphPattern& p) {
  Graph g;
  for (const auto& tp : p) g.insert(Triple(tp.subject, tp.predicate, tp.object));
  return g;
}

namespace {

// Per-position index over a graph, shared by the matching routines.
struct GraphIndex {
  std::unordered_map<std::string, std::vector<const Triple*>> by_subject;
  std::unordered_map<std::string, std::vector<const Triple*>> by_predicate;
  std::vector<const Triple*> all;

  explicit GraphIndex(const Graph& g) {
    all.reserve(g.size());
    for (const auto& t : g) {
      all.push_back(&t);
      by_subject[t.subject.text].push_back(&t);
      by_predicate[t.predicate.text].push_back(&t);
    }
  }

  const std::vector<const Triple*>* candidates(const TriplePattern& tp) const {
    static const std::vector<const Triple*> kEmpty;
    // Prefer the predicate index; predicates are constants in most inputs.
    if (tp.predicate.is_constant()) {
      if (!tp.predicate.is_uri()) return &kEmpty;
      auto it = by_predicate.find(tp.predicate.text);
      return it == by_predicate.end() ? &kEmpty : &it->second;
    }
    if (tp.subject.is_constant()) {
      if (!tp.subject.is_uri()) return &kEmpty;
      auto it = by_subject.find(tp.subject.text);
      return it == by_subject.end() ? &kEmpty : &it->second;
    }
    return &all;
  }
};

// Tries to extend m so that tp matches t; returns false on conflict.
bool unify(const TriplePattern& tp, const Triple& t, Mapping& m) {
  for (int pos : {1, 2, 3}) {
    const Term& pat = tp.at(pos);
    const Term& val = t.at(pos);
    if (pat.is_constant()) {
      if (pat != val) return false;
    } else if (const Term* bound = m.find(pat)) {
      if (*bound != val) return false;
    } else {
      m.bind(pat, val);
    }
  }
  return true;
}

std::vector<Mapping> match_with_index(const TriplePattern& tp, const GraphIndex& index,
                                      const Mapping& seed) {
  // Fold current bindings into the pattern so the index can narrow candidates.
  VarSubstitution s(seed);
  Term subj = s.apply(tp.subject);
  Term pred = s.apply(tp.predicate);
  if (subj.is_literal() || pred.is_literal()) return {};
  TriplePattern bound(std::move(subj), std::move(pred), s.apply(tp.object));

  std::vector<Mapping> out;
  for (const Triple* t : *index.candidates(bound)) {
    Mapping m = seed;
    if (unify(bound, *t, m)) out.push_back(std::move(m));
  }
  return out;
}

size_t unbound_var_count(const TriplePattern& tp, const std::set<std::string>& bound) {
  size_t n = 0;
  for (int pos : {1, 2, 3}) {
    const Term& t = tp.at(pos);
    if (t.is_variable() && !bound.count(t.text)) ++n;
  }
  return n;
}

}  // namespace

std::vector<Mapping> match_pattern(const TriplePattern& tp, const Graph& g) {
  GraphIndex index(g);
  return match_with_index(tp, index, Mapping());
}

std::vector<Mapping> evaluate_bgp(const GraphPattern& p, const Graph& g) {
  GraphIndex index(g);

  std::vector<Mapping> partial;
  partial.emplace_back();

  // Greedy join order: at each step take the pattern with the fewest
  // still-unbound variables.
  std::vector<const TriplePattern*> remaining;
  for (const auto& tp : p) remaining.push_back(&tp);
  std::set<std::string> bound;

  while (!remaining.empty()) {
    auto best = std::min_element(remaining.begin(), remaining.end(),
                                 [&](const TriplePattern* a, const TriplePattern* b) {
                                   return unbound_var_count(*a, bound) <
                                          unbound_var_count(*b, bound);
                                 });
    const TriplePattern* tp = *best;
    remaining.erase(best);
    for (int pos : {1, 2, 3})
      if (tp->at(pos).is_variable()) bound.insert(tp->at(pos).text);

    std::vector<Mapping> next;
    for (const Mapping& m : partial) {
      auto extended = match_with_index(*tp, index, m);
      next.insert(next.end(), std::make_move_iterator(extended.begin()),
                  std::make_move_iterator(extended.end()));
    }
    partial = std::move(next);
    if (partial.empty()) return {};
  }

  std::sort(partial.begin(), partial.end());
  partial.erase(std::unique(partial.begin(), partial.end()), partial.end());
  return partial;
}

}  // namespace scon
