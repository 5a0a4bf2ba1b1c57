#ifndef SCON_GENBENCH_HPP
#define SCON_GENBENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "scon/consequence.hpp"
#include "scon/rules.hpp"
#include "scon/schema.hpp"

namespace scon {

/// The seven generator parameters plus the seed.
struct GenParams {
  double pi_c = 0.1;  // probability of a constant in subject/object position
  size_t n_p = 1;     // predicate URI pool size
  size_t n_u = 1;     // URI pool size (disjoint from predicates)
  size_t n_l = 1;     // literal pool size
  size_t n_s = 1;     // schema size
  size_t n_r = 1;     // rule count
  size_t n_a = 1;     // antecedent length
  uint64_t seed = 0;
};

/// Deterministic synthetic instance: n_r chain rules (object of each
/// antecedent triple joins the subject of the next; the consequent links the
/// first subject to the last object), and a schema whose first half copies
/// antecedent triples of random rules with per-occurrence fresh variables
/// and whose second half is random patterns. The no-literal set collects all
/// subject-position variables.
std::pair<TriplestoreSchema, RuleSet> generate(const GenParams& p);

struct BenchRow {
  GenParams params;
  Method method = Method::Score;
  double elapsed_ms = 0;
  bool timed_out = false;
  size_t output_size = 0;  // mean output pattern count over repetitions
};

/// Times schema_closure for each grid cell and method. Each cell runs
/// `repetitions` independently seeded (S,R) pairs and records the mean. A
/// method that times out on a cell is skipped for the remaining (larger)
/// cells of the sweep; skipped rows carry the budget as elapsed time.
std::vector<BenchRow> run_bench(const std::vector<GenParams>& grid,
                                const std::vector<Method>& methods, size_t repetitions,
                                std::chrono::milliseconds timeout);

/// CSV with header method,ns,np,nu,nl,nr,na,pic,seed,elapsed_ms,timed_out,output_size.
void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace scon

#endif
