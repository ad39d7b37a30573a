#include <CLI11.hpp>
#include <iostream>

#include "imx/report.hpp"

using namespace imx;

int main(int argc, char** argv) {
  CLI::App app{"implicitize: implicit equations of parametrized hypersurfaces"};
  app.require_subcommand(1);

  std::string input, algorithm = "direct", primes_spec;
  long long characteristic = -1, max_degree = -1;
  uint64_t seed = 42;
  bool do_verify = false, kv = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--algorithm", algorithm,
                    "elimth|direct|ratpar-elimth|ratpar-direct|classical|modular-elimth|"
                    "modular-direct|single-prime");
    cmd->add_option("--char", characteristic, "coefficient characteristic (0 or a prime)");
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--max-degree", max_degree, "degree cap for direct on s >= n inputs");
    cmd->add_option("--primes", primes_spec, "prime pool as start,count (descending scan)");
    cmd->add_flag("--kv", kv, "also machine-readable key-value lines");
  };

  CLI::App* run = app.add_subcommand("run", "run one problem file");
  run->add_option("--input", input, "problem file")->required();
  run->add_flag("--verify", do_verify, "verify the result by substitution");
  add_common(run);

  std::string corpus_dir, expect_file;
  double budget = 60.0;
  int workers = 1;
  CLI::App* corpus = app.add_subcommand("corpus", "run a corpus against expected Len values");
  corpus->add_option("--dir", corpus_dir, "directory with <name>.prob files")->required();
  corpus->add_option("--expect", expect_file, "expectations file: name<TAB>len")->required();
  corpus->add_option("--budget", budget, "per-example time budget in seconds");
  corpus->add_option("--workers", workers, "parallel corpus workers");
  add_common(corpus);

  CLI11_PARSE(app, argc, argv);

  RunConfig cfg;
  auto alg = algorithm_from_name(algorithm);
  if (!alg) {
    std::cerr << "unknown algorithm: " << algorithm << "\n";
    return 1;
  }
  cfg.alg = *alg;
  cfg.characteristic = characteristic;
  cfg.seed = seed;
  cfg.max_degree = max_degree;
  cfg.verify = do_verify;
  if (!primes_spec.empty()) {
    auto comma = primes_spec.find(',');
    cfg.primes_start = std::stoull(primes_spec.substr(0, comma));
    if (comma != std::string::npos) cfg.primes_count = std::stoul(primes_spec.substr(comma + 1));
  }

  try {
    if (run->parsed()) {
      ParamSystem sys = load_problem_file(input);
      RunReport rep = run_problem(sys, input, cfg);
      std::cout << format_report(rep, false);
      if (kv) std::cout << format_report(rep, true);
      return report_exit_code(rep);
    }
    cfg.budget_seconds = budget;
    CorpusResult res = corpus_run(corpus_dir, expect_file, cfg, workers);
    std::cout << format_corpus(res, false);
    if (kv) std::cout << format_corpus(res, true);
    return res.all_passed() ? 0 : 4;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PrimePoolExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
