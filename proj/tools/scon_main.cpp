// Command-line front end: schema consequences, applicability reports,
// instance-level rule application, format checks, the synthetic generator,
// the benchmark harness and the brute-force theorem oracle.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "scon/consequence.hpp"
#include "scon/genbench.hpp"
#include "scon/io.hpp"
#include "scon/oracle.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitLimit = 3;

struct InputError {
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError{"cannot write '" + path + "'"};
  out << content;
}

template <typename T>
T parse_or_fail(const scon::ParseResult<T>& result, const std::string& path) {
  for (const auto& d : result.diagnostics) std::cerr << path << ": " << to_string(d) << "\n";
  if (!result.ok()) throw InputError{"failed to parse '" + path + "'"};
  return *result.value;
}

scon::TriplestoreSchema load_schema(const std::string& path) {
  return parse_or_fail(scon::parse_schema(slurp(path)), path);
}
scon::RuleSet load_rules(const std::string& path) {
  return parse_or_fail(scon::parse_rules(slurp(path)), path);
}
scon::Graph load_graph(const std::string& path) {
  return parse_or_fail(scon::parse_graph(slurp(path)), path);
}

scon::Method parse_method(const std::string& name) {
  if (name == "score") return scon::Method::Score;
  if (name == "critical") return scon::Method::Critical;
  throw InputError{"unknown method '" + name + "' (expected score or critical)"};
}

std::vector<scon::GenParams> load_grid(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError{std::string("grid file: ") + e.what()};
  }
  if (!doc.is_array()) throw InputError{"grid file must be a JSON array of parameter objects"};
  std::vector<scon::GenParams> grid;
  for (const auto& cell : doc) {
    scon::GenParams p;
    try {
      p.pi_c = cell.at("pic").get<double>();
      p.n_p = cell.at("np").get<size_t>();
      p.n_u = cell.at("nu").get<size_t>();
      p.n_l = cell.at("nl").get<size_t>();
      p.n_s = cell.at("ns").get<size_t>();
      p.n_r = cell.at("nr").get<size_t>();
      p.n_a = cell.at("na").get<size_t>();
      p.seed = cell.value("seed", uint64_t{0});
    } catch (const nlohmann::json::exception& e) {
      throw InputError{std::string("grid cell: ") + e.what()};
    }
    grid.push_back(p);
  }
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule applicability and schema consequences for triplestore schemas"};
  app.require_subcommand(1);

  std::string schema_path, rules_path, graph_path, out_path, method_name = "score";
  std::string path_a, path_b, out_schema, out_rules, grid_path, csv_path;
  bool closure = false, approx = false;
  scon::GenParams gen_params;
  size_t reps = 1, timeout_secs = 600;
  size_t oracle_uris = 2, oracle_lits = 1, oracle_max = 4;

  auto* consequence = app.add_subcommand("consequence", "compute the schema consequence");
  consequence->add_option("--schema", schema_path)->required();
  consequence->add_option("--rules", rules_path)->required();
  consequence->add_option("--method", method_name)->check(CLI::IsMember({"score", "critical"}));
  consequence->add_option("--out", out_path);

  auto* applicable = app.add_subcommand("applicable", "report rule applicability");
  applicable->add_option("--schema", schema_path)->required();
  applicable->add_option("--rules", rules_path)->required();
  applicable->add_option("--method", method_name)->check(CLI::IsMember({"score", "critical"}));
  applicable->add_flag("--approx", approx,
                       "over-approximate: rules observed firing during one joint closure");

  auto* apply = app.add_subcommand("apply", "apply rules to an instance graph");
  apply->add_option("--graph", graph_path)->required();
  apply->add_option("--rules", rules_path)->required();
  apply->add_flag("--closure", closure, "iterate to the fixpoint");
  apply->add_option("--out", out_path);

  auto* check = app.add_subcommand("check-instance", "test whether a graph instantiates a schema");
  check->add_option("--graph", graph_path)->required();
  check->add_option("--schema", schema_path)->required();

  auto* equiv = app.add_subcommand("equiv", "test semantic equivalence of two schemas");
  equiv->add_option("--a", path_a)->required();
  equiv->add_option("--b", path_b)->required();

  auto* gen = app.add_subcommand("gen", "generate a synthetic schema and rule set");
  gen->add_option("--pic", gen_params.pi_c);
  gen->add_option("--np", gen_params.n_p);
  gen->add_option("--nu", gen_params.n_u);
  gen->add_option("--nl", gen_params.n_l);
  gen->add_option("--ns", gen_params.n_s);
  gen->add_option("--nr", gen_params.n_r);
  gen->add_option("--na", gen_params.n_a);
  gen->add_option("--seed", gen_params.seed);
  gen->add_option("--out-schema", out_schema)->required();
  gen->add_option("--out-rules", out_rules)->required();

  auto* bench = app.add_subcommand("bench", "time schema consequences over a parameter grid");
  bench->add_option("--grid", grid_path)->required();
  bench->add_option("--reps", reps);
  bench->add_option("--timeout-secs", timeout_secs);
  bench->add_option("--csv", csv_path)->required();
  std::vector<std::string> bench_methods{"score", "critical"};
  bench->add_option("--methods", bench_methods)->delimiter(',');

  auto* oracle = app.add_subcommand("oracle", "brute-force theorem checks at desk scale");
  oracle->add_option("--schema", schema_path)->required();
  oracle->add_option("--rules", rules_path)->required();
  oracle->add_option("--uris", oracle_uris);
  oracle->add_option("--lits", oracle_lits);
  oracle->add_option("--max-triples", oracle_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*consequence) {
      auto report = scon::schema_closure(load_schema(schema_path), load_rules(rules_path),
                                         parse_method(method_name));
      std::string text = scon::serialize_schema(report.output);
      if (out_path.empty())
        std::cout << text;
      else
        write_file(out_path, text);
      std::cerr << "iterations: " << report.iterations << "\n";
      return kExitTrue;
    }

    if (*applicable) {
      auto schema = load_schema(schema_path);
      auto rules = load_rules(rules_path);
      auto method = parse_method(method_name);
      std::map<std::string, bool> verdict =
          approx ? scon::schema_closure(schema, rules, method).applicable
                 : scon::applicability_report(schema, rules, method);
      for (const auto& r : rules.rules)
        std::cout << r.name << " " << (verdict.at(r.name) ? "true" : "false") << "\n";
      return kExitTrue;
    }

    if (*apply) {
      auto instance = load_graph(graph_path);
      auto rules = load_rules(rules_path);
      for (const auto& r : rules.rules) {
        auto violations = scon::validate_rule(r);
        if (!violations.empty())
          throw InputError{"rule '" + r.name + "': " + violations.front()};
      }
      scon::Graph result;
      if (closure) {
        result = scon::closure_instance(instance, rules);
      } else {
        result = instance;
        for (const auto& r : rules.rules)
          for (const auto& t : scon::apply_rule_once(r, instance)) result.insert(t);
      }
      std::string text = scon::serialize_graph(result);
      if (out_path.empty())
        std::cout << text;
      else
        write_file(out_path, text);
      return kExitTrue;
    }

    if (*check) {
      bool ok = scon::is_instance(load_graph(graph_path), load_schema(schema_path));
      return ok ? kExitTrue : kExitFalse;
    }

    if (*equiv) {
      bool ok = scon::schema_equiv(load_schema(path_a), load_schema(path_b));
      return ok ? kExitTrue : kExitFalse;
    }

    if (*gen) {
      auto [schema, rules] = scon::generate(gen_params);
      write_file(out_schema, scon::serialize_schema(schema));
      write_file(out_rules, scon::serialize_rules(rules));
      return kExitTrue;
    }

    if (*bench) {
      std::vector<scon::Method> methods;
      for (const auto& m : bench_methods) methods.push_back(parse_method(m));
      auto rows = scon::run_bench(load_grid(grid_path), methods, reps,
                                  std::chrono::seconds(timeout_secs));
      std::ostringstream csv;
      scon::write_csv(rows, csv);
      write_file(csv_path, csv.str());
      return kExitTrue;
    }

    if (*oracle) {
      auto schema = load_schema(schema_path);
      auto rules = load_rules(rules_path);
      scon::EnumBounds bounds{oracle_uris, oracle_lits, oracle_max};
      bool all_ok = true;
      for (const auto& r : rules.rules) {
        bool t1 = scon::check_theorem1(schema, r);
        auto t2 = scon::check_theorem2(schema, r, bounds);
        all_ok = all_ok && t1 && t2.sound && t2.tight;
        std::cout << r.name << " equivalence=" << (t1 ? "ok" : "FAIL")
                  << " sound=" << (t2.sound ? "ok" : "FAIL")
                  << " tight=" << (t2.tight ? "ok" : "FAIL");
        if (t2.counterexample) std::cout << "  (" << *t2.counterexample << ")";
        std::cout << "\n";
      }
      return all_ok ? kExitTrue : kExitFalse;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const scon::IterationLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const scon::TimeoutError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  }
  return kExitInputError;
}
