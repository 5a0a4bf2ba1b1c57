#ifndef SCON_RDF_HPP
#define SCON_RDF_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core RDF data model: constants-only triples and graphs on the data side,
// triple patterns, graph patterns and mappings on the query side.
// All types are immutable value types; operations on them are pure.
namespace scon {

enum class TermKind { Uri, Literal, Variable };

/// A URI, literal or variable. URIs are opaque prefixed names (no namespace
/// expansion); literals carry no datatype or language tag.
struct Term {
  TermKind kind;
  std::string text;  // nonempty; variables are stored without the '?' sigil

  static Term uri(std::string t) { return make(TermKind::Uri, std::move(t)); }
  static Term literal(std::string t) { return make(TermKind::Literal, std::move(t)); }
  static Term var(std::string t) { return make(TermKind::Variable, std::move(t)); }

  bool is_uri() const { return kind == TermKind::Uri; }
  bool is_literal() const { return kind == TermKind::Literal; }
  bool is_variable() const { return kind == TermKind::Variable; }
  bool is_constant() const { return kind != TermKind::Variable; }

  auto operator<=>(const Term&) const = default;

 private:
  static Term make(TermKind k, std::string t) {
    if (t.empty()) throw std::invalid_argument("term text must be nonempty");
    return Term{k, std::move(t)};
  }
};

/// Renders a term the way the text formats spell it (?v, "lit", :uri).
std::string to_string(const Term& t);

/// A ground RDF triple. Subject and predicate are URIs; the object is a URI
/// or a literal.
struct Triple {
  Term subject;
  Term predicate;
  Term object;

  Triple(Term s, Term p, Term o)
      : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
    if (!subject.is_uri()) throw std::invalid_argument("triple subject must be a URI");
    if (!predicate.is_uri()) throw std::invalid_argument("triple predicate must be a URI");
    if (object.is_variable()) throw std::invalid_argument("triple object must be a constant");
  }

  const Term& at(int pos) const { return pos == 1 ? subject : pos == 2 ? predicate : object; }

  auto operator<=>(const Triple&) const = default;
};

std::string to_string(const Triple& t);

/// A duplicate-free set of triples. Inserting an existing triple is a no-op.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<Triple> triples) {
    for (auto& t : triples) insert(std::move(t));
  }

  void insert(Triple t) { triples_.insert(std::move(t)); }
  bool contains(const Triple& t) const { return triples_.count(t) != 0; }
  size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

  bool operator==(const Graph&) const = default;

  /// True iff this graph is a subset of g.
  bool subset_of(const Graph& g) const {
    for (const auto& t : triples_)
      if (!g.contains(t)) return false;
    return true;
  }

 private:
  std::set<Triple> triples_;
};

/// A triple pattern: URI or variable in subject/predicate position, any term
/// in object position. Literals may appear only as objects.
struct TriplePattern {
  Term subject;
  Term predicate;
  Term object;

  TriplePattern(Term s, Term p, Term o)
      : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
    if (subject.is_literal()) throw std::invalid_argument("literal in subject position");
    if (predicate.is_literal()) throw std::invalid_argument("literal in predicate position");
  }

  const Term& at(int pos) const { return pos == 1 ? subject : pos == 2 ? predicate : object; }
  bool is_ground() const {
    return subject.is_constant() && predicate.is_constant() && object.is_constant();
  }

  auto operator<=>(const TriplePattern&) const = default;
};

std::string to_string(const TriplePattern& tp);

/// An ordered, duplicate-free collection of triple patterns. Order is
/// presentation only; the semantics are set-based.
class GraphPattern {
 public:
  GraphPattern() = default;
  explicit GraphPattern(std::vector<TriplePattern> patterns) {
    for (auto& p : patterns) add(std::move(p));
  }

  void add(TriplePattern p) {
    if (seen_.insert(p).second) patterns_.push_back(std::move(p));
  }

  const std::vector<TriplePattern>& patterns() const { return patterns_; }
  size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

  bool operator==(const GraphPattern& o) const { return seen_ == o.seen_; }

 private:
  std::vector<TriplePattern> patterns_;
  std::set<TriplePattern> seen_;
};

/// Variables and constants occurring in a pattern (vars(P), const(P)).
std::pair<std::set<Term>, std::set<Term>> term_sets(const GraphPattern& p);
std::set<Term> pattern_variables(const GraphPattern& p);
std::set<Term> pattern_constants(const GraphPattern& p);

/// A mapping binds variables to constants. Variable keys are stored by name.
class Mapping {
 public:
  Mapping() = default;

  void bind(const Term& var, Term value) {
    if (!var.is_variable()) throw std::invalid_argument("mapping key must be a variable");
    if (value.is_variable()) throw std::invalid_argument("mapping value must be a constant");
    bindings_.insert_or_assign(var.text, std::move(value));
  }

  bool binds(const Term& var) const { return bindings_.count(var.text) != 0; }
  const Term& value(const Term& var) const { return bindings_.at(var.text); }
  const Term* find(const Term& var) const {
    auto it = bindings_.find(var.text);
    return it == bindings_.end() ? nullptr : &it->second;
  }

  size_t size() const { return bindings_.size(); }
  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  /// True if the two mappings agree on every shared variable.
  bool compatible_with(const Mapping& o) const;
  /// Union of two compatible mappings.
  Mapping merged_with(const Mapping& o) const;

  auto operator<=>(const Mapping&) const = default;

 private:
  std::map<std::string, Term> bindings_;  // variable name -> constant
};

std::string to_string(const Mapping& m);

/// A variable substitution may also send variables to variables.
class VarSubstitution {
 public:
  VarSubstitution() = default;
  explicit VarSubstitution(const Mapping& m) {
    for (const auto& [name, value] : m) bindings_.emplace(name, value);
  }

  void bind(const Term& var, Term value) {
    if (!var.is_variable()) throw std::invalid_argument("substitution key must be a variable");
    bindings_.insert_or_assign(var.text, std::move(value));
  }

  const Term* find(const Term& var) const {
    auto it = bindings_.find(var.text);
    return it == bindings_.end() ? nullptr : &it->second;
  }

  /// Substitutes a single term; terms outside the domain pass through.
  Term apply(const Term& t) const {
    if (!t.is_variable()) return t;
    const Term* v = find(t);
    return v ? *v : t;
  }

 private:
  std::map<std::string, Term> bindings_;
};

/// Thrown when a substitution would place a literal in a subject or
/// predicate position.
struct SubstitutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Applies a substitution to every pattern of p; the result is deduplicated.
/// Throws SubstitutionError if a literal lands in subject/predicate position.
GraphPattern apply_substitution(const VarSubstitution& s, const GraphPattern& p);

/// Non-throwing variant: returns nullopt instead of raising.
std::optional<GraphPattern> try_apply_substitution(const VarSubstitution& s,
                                                   const GraphPattern& p);

/// True iff no literal occurs in subject/predicate position and no variable
/// occurs anywhere; such a pattern set is a valid RDF graph.
bool is_valid_rdf_graph(const GraphPattern& p);

/// Converts a ground, valid pattern set to a graph.
Graph to_graph(const GraphPattern& p);

/// SPARQL BGP evaluation: all mappings m with dom(m) = vars(P) and m(P) ⊆ G.
/// The empty pattern yields a single empty mapping.
std::vector<Mapping> evaluate_bgp(const GraphPattern& p, const Graph& g);

/// Matches of a single triple pattern against a graph (partial mappings over
/// the pattern's variables). Building block for BGP and UCQ evaluation.
std::vector<Mapping> match_pattern(const TriplePattern& tp, const Graph& g);

}  // namespace scon

#endif
