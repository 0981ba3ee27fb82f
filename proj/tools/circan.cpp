// circan: normality and CI analysis of Cayley digraphs of cyclic groups.
//
// Subcommands:
//   analyze <instance> [--json]           one full instance report
//   witness li <r> | graph <s> <m>        emit a witness instance + report
//   sweep <n> [--max-size K] [--jobs J] [--cache FILE]
//   verify-theorem --from A --to B --mode digraph|graph [--max-size K] [--jobs J]
//   oracle <instance>                     brute-force cross-checks (n <= 8)
//
// Exit codes: 0 ok, 1 usage, 2 budget, 3 theorem mismatch.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "circan/aut_search.hpp"
#include "circan/cayley.hpp"
#include "circan/ci.hpp"
#include "circan/constructions.hpp"
#include "circan/errors.hpp"
#include "circan/sweep.hpp"

namespace {

int max_n_cap() {
  if (const char* env = std::getenv("CIRC_MAX_N")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);  // the row layout tops out at 64
  }
  return 64;
}

circan::ConnectionSet parse_checked(const std::string& text) {
  circan::ConnectionSet s = circan::parse_instance(text);
  if (s.n > max_n_cap())
    throw circan::BudgetError("n = " + std::to_string(s.n) +
                              " exceeds the configured cap " +
                              std::to_string(max_n_cap()));
  return s;
}

int run_analyze(const std::string& instance, bool as_json) {
  circan::ConnectionSet s = parse_checked(instance);
  circan::InstanceReport rep = circan::classify(s);
  if (as_json)
    std::cout << rep.to_json() << "\n";
  else
    std::cout << rep.to_text();
  return 0;
}

int run_witness(const std::string& family, int a, int b, bool as_json) {
  circan::ConnectionSet s = family == "li" ? circan::li_digraph_witness(a)
                                           : circan::graph_witness(a, b);
  if (!as_json) std::cout << "instance: " << s.to_text() << "\n";
  return run_analyze(s.to_text(), as_json);
}

int run_sweep(int n, std::optional<int> max_size, int jobs,
              const std::string& cache_path) {
  circan::ReportCache cache;
  circan::ReportCache* cache_ptr = nullptr;
  if (!cache_path.empty()) {
    cache.load(cache_path);
    cache_ptr = &cache;
  }
  std::vector<std::string> lines =
      circan::sweep_reports(n, max_size, jobs, cache_ptr);
  for (const std::string& line : lines) std::cout << line << "\n";
  if (cache_ptr) cache.append_new_to(cache_path);
  return 0;
}

int run_verify(int from, int to, const std::string& mode,
               std::optional<int> max_size, int jobs) {
  circan::SweepMode m = mode == "graph" ? circan::SweepMode::kGraph
                                        : circan::SweepMode::kDigraph;
  std::vector<circan::TheoremVerdict> verdicts =
      circan::verify_theorem(from, to, m, max_size, jobs);
  bool mismatch = false;
  bool incomplete = false;
  for (const circan::TheoremVerdict& v : verdicts) {
    std::cout << "n=" << v.n << " mode=" << (v.graph_mode ? "graph" : "digraph");
    if (v.incomplete) {
      std::cout << " INCOMPLETE (outside sweep budget)\n";
      incomplete = true;
      continue;
    }
    std::cout << " all-normal-ci=" << (v.observed_all_normal_ci ? "yes" : "no")
              << " predicate=" << (v.predicate ? "yes" : "no")
              << (v.matches() ? " MATCH" : " MISMATCH");
    if (!v.counterexamples.empty()) {
      std::cout << " counterexamples:";
      for (const std::string& c : v.counterexamples) std::cout << " " << c;
    }
    std::cout << "\n";
    if (!v.matches()) mismatch = true;
  }
  if (mismatch) return 3;
  if (incomplete) return 2;
  return 0;
}

int run_oracle(const std::string& instance) {
  circan::ConnectionSet s = parse_checked(instance);
  if (s.n > 8) throw circan::BudgetError("oracle requires n <= 8");
  circan::CayleyDigraph g = circan::build(s);

  circan::PermGroup fast = circan::automorphism_group(g);
  circan::PermGroup brute = circan::brute_force_aut(g);
  bool aut_agree = fast.elements() == brute.elements();

  bool babai = circan::is_ci_babai(g, fast).is_ci;
  bool exhaustive = circan::is_ci_exhaustive(s.n, s);
  bool ci_agree = (babai == exhaustive);

  std::cout << "aut_order=" << fast.order()
            << " aut_search_vs_brute=" << (aut_agree ? "agree" : "DISAGREE")
            << "\n";
  std::cout << "babai=" << (babai ? "true" : "false")
            << " exhaustive=" << (exhaustive ? "true" : "false")
            << " agreement=" << (ci_agree ? "true" : "false") << "\n";
  return (aut_agree && ci_agree) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normality / CI analysis for Cayley digraphs of Z_n"};
  app.require_subcommand(1);

  std::string instance;
  bool as_json = false;

  CLI::App* analyze = app.add_subcommand("analyze", "analyze one instance");
  analyze->add_option("instance", instance, "instance text, e.g. 8:1,2,5")
      ->required();
  analyze->add_flag("--json", as_json, "emit the JSON report");

  std::string family;
  int wit_a = 0, wit_b = 1;
  CLI::App* witness = app.add_subcommand("witness", "emit a witness instance");
  witness->add_option("family", family, "li | graph")
      ->required()
      ->check(CLI::IsMember({"li", "graph"}));
  witness->add_option("r_or_s", wit_a, "r (li) or s (graph)")->required();
  witness->add_option("m", wit_b, "m (graph only)");
  witness->add_flag("--json", as_json, "emit the JSON report");

  int sweep_n = 0;
  int jobs = 1;
  int max_size_flag = -1;
  std::string cache_path;
  CLI::App* sweep = app.add_subcommand("sweep", "classify all representatives");
  sweep->add_option("n", sweep_n, "modulus")->required();
  sweep->add_option("--max-size", max_size_flag, "bound on |S|");
  sweep->add_option("--jobs", jobs, "worker count");
  sweep->add_option("--cache", cache_path, "JSON-lines result cache");

  int from = 1, to = 1;
  std::string mode = "digraph";
  CLI::App* verify = app.add_subcommand("verify-theorem",
                                        "sweep a range and compare predicates");
  verify->add_option("--from", from, "first n")->required();
  verify->add_option("--to", to, "last n")->required();
  verify->add_option("--mode", mode, "digraph | graph")
      ->required()
      ->check(CLI::IsMember({"digraph", "graph"}));
  verify->add_option("--max-size", max_size_flag, "bound on |S|");
  verify->add_option("--jobs", jobs, "worker count");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  oracle->add_option("instance", instance, "instance text (n <= 8)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  std::optional<int> max_size;
  if (max_size_flag >= 0) max_size = max_size_flag;

  try {
    if (app.got_subcommand(analyze)) return run_analyze(instance, as_json);
    if (app.got_subcommand(witness)) {
      if (family == "graph" && witness->count("m") == 0) {
        std::cerr << "witness graph requires s and m\n";
        return 1;
      }
      return run_witness(family, wit_a, wit_b, as_json);
    }
    if (app.got_subcommand(sweep))
      return run_sweep(sweep_n, max_size, jobs, cache_path);
    if (app.got_subcommand(verify))
      return run_verify(from, to, mode, max_size, jobs);
    if (app.got_subcommand(oracle)) return run_oracle(instance);
  } catch (const circan::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const circan::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const circan::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const circan::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
