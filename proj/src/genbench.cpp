#include "scon/genbench.hpp"

#include <ostream>
#include <random>

namespace scon {

namespace {

// mt19937_64 with portable derived draws; std::uniform_int_distribution is
// implementation-defined, and the stream here is pinned by golden tests.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  size_t index(size_t n) {  // uniform in [0, n)
    uint64_t bound = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      uint64_t x = engine_();
      if (x < bound) return static_cast<size_t>(x % n);
    }
  }

  bool bernoulli(double p) { return (engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

void check_params(const GenParams& p) {
  if (p.pi_c < 0.0 || p.pi_c > 1.0) throw std::invalid_argument("pi_c must be in [0,1]");
  if (p.n_p < 1 || p.n_u < 1 || p.n_l < 1 || p.n_s < 1 || p.n_r < 1 || p.n_a < 1)
    throw std::invalid_argument("all generator sizes must be >= 1");
}

}  // namespace

std::pair<TriplestoreSchema, RuleSet> generate(const GenParams& p) {
  check_params(p);
  Rng rng(p.seed);

  auto predicate = [&] { return Term::uri(":m" + std::to_string(rng.index(p.n_p))); };
  auto pool_uri = [&] { return Term::uri(":u" + std::to_string(rng.index(p.n_u))); };
  auto pool_literal = [&] { return Term::literal("l" + std::to_string(rng.index(p.n_l))); };

  RuleSet rules;
  for (size_t i = 0; i < p.n_r; ++i) {
    GraphPattern antecedent;
    for (size_t j = 0; j < p.n_a; ++j)
      antecedent.add(TriplePattern(Term::var("v" + std::to_string(j)), predicate(),
                                   Term::var("v" + std::to_string(j + 1))));
    GraphPattern consequent;
    consequent.add(
        TriplePattern(Term::var("v0"), predicate(), Term::var("v" + std::to_string(p.n_a))));
    rules.rules.push_back(Rule{"r" + std::to_string(i), std::move(antecedent),
                               std::move(consequent)});
  }

  size_t fresh_counter = 0;
  auto fresh_var = [&] { return Term::var("x" + std::to_string(fresh_counter++)); };

  GraphPattern schema_graph;
  std::set<Term> nolit;
  size_t seeded = p.n_s / 2;
  // Copy the full antecedents of randomly selected rules (truncating the
  // last one if the budget runs out), renaming each variable occurrence so
  // the schema keeps its single-occurrence invariant. Seeding complete
  // antecedents keeps the selected rules applicable by construction.
  for (size_t placed = 0; placed < seeded;) {
    const Rule& picked = rules.rules[rng.index(rules.rules.size())];
    for (const TriplePattern& src : picked.antecedent) {
      if (placed == seeded) break;
      Term subj = src.subject.is_variable() ? fresh_var() : src.subject;
      Term obj = src.object.is_variable() ? fresh_var() : src.object;
      if (subj.is_variable()) nolit.insert(subj);
      schema_graph.add(TriplePattern(std::move(subj), src.predicate, std::move(obj)));
      ++placed;
    }
  }
  for (size_t k = seeded; k < p.n_s; ++k) {
    Term subj = rng.bernoulli(p.pi_c) ? pool_uri() : fresh_var();
    Term pred = predicate();
    Term obj = rng.bernoulli(p.pi_c) ? (rng.bernoulli(0.5) ? pool_uri() : pool_literal())
                                     : fresh_var();
    if (subj.is_variable()) nolit.insert(subj);
    schema_graph.add(TriplePattern(std::move(subj), std::move(pred), std::move(obj)));
  }

  return {TriplestoreSchema(std::move(schema_graph), std::move(nolit)), std::move(rules)};
}

std::vector<BenchRow> run_bench(const std::vector<GenParams>& grid,
                                const std::vector<Method>& methods, size_t repetitions,
                                std::chrono::milliseconds timeout) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");

  std::map<Method, bool> pruned;
  std::vector<BenchRow> rows;
  for (const GenParams& cell : grid) {
    for (Method method : methods) {
      BenchRow row;
      row.params = cell;
      row.method = method;
      if (pruned[method]) {
        row.timed_out = true;
        row.elapsed_ms = static_cast<double>(timeout.count());
        rows.push_back(row);
        continue;
      }

      double total_ms = 0;
      size_t total_patterns = 0;
      for (size_t rep = 0; rep < repetitions && !row.timed_out; ++rep) {
        GenParams params = cell;
        params.seed = cell.seed + rep;
        auto [schema, rules] = generate(params);

        ClosureOptions options;
        options.deadline = Deadline::after(timeout);
        auto start = std::chrono::steady_clock::now();
        try {
          auto report = schema_closure(schema, rules, method, options);
          total_patterns += report.output.graph().size();
        } catch (const TimeoutError&) {
          row.timed_out = true;
        }
        std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - start;
        total_ms += elapsed.count();
      }

      if (row.timed_out) {
        row.elapsed_ms = std::max(total_ms, static_cast<double>(timeout.count()));
        pruned[method] = true;
      } else {
        row.elapsed_ms = total_ms / static_cast<double>(repetitions);
        row.output_size = total_patterns / repetitions;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "method,ns,np,nu,nl,nr,na,pic,seed,elapsed_ms,timed_out,output_size\n";
  for (const auto& r : rows) {
    const auto& p = r.params;
    out << method_name(r.method) << ',' << p.n_s << ',' << p.n_p << ',' << p.n_u << ','
        << p.n_l << ',' << p.n_r << ',' << p.n_a << ',' << p.pi_c << ',' << p.seed << ','
        << r.elapsed_ms << ',' << (r.timed_out ? 1 : 0) << ',' << r.output_size << '\n';
  }
}

}  // namespace scon
