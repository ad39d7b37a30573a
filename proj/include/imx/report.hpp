#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imx/modular.hpp"

namespace imx {

enum class Algorithm {
  ElimTH,
  Direct,
  RatParElimTH,
  RatParDirect,
  Classical,
  ModularElimTH,
  ModularDirect,
  SinglePrime,
};

std::optional<Algorithm> algorithm_from_name(const std::string& name);
const char* algorithm_name(Algorithm a);

struct RunConfig {
  Algorithm alg = Algorithm::Direct;
  long long characteristic = -1;  // -1: take the problem file's
  bool verify = false;
  uint64_t seed = 42;
  long long max_degree = -1;
  uint64_t primes_start = (uint64_t(1) << 31) - 1;
  size_t primes_count = 64;
  double budget_seconds = 0;  // 0: unlimited
};

struct RunReport {
  std::string input_id;
  std::string algorithm;
  long long characteristic = 0;
  double seconds = 0;
  std::string result_text;
  size_t len = 0;
  std::optional<bool> verified;
  std::optional<size_t> primes_used;
  std::vector<std::string> warnings;
  std::vector<std::string> modular_log;
  std::vector<std::string> notes;
};

RunReport run_problem(const ParamSystem& sys, const std::string& input_id, const RunConfig& cfg);

std::string format_report(const RunReport& rep, bool kv);

/// Exit codes: 0 ok, 1 usage/other error, 2 cap exceeded, 3 prime pool
/// exhausted, 4 a check failed (verification or corpus mismatch).
int report_exit_code(const RunReport& rep);

struct CorpusRow {
  std::string name;
  size_t expected_len = 0;
  std::string status;  // PASS / FAIL / SKIP
  std::string message;
  RunReport report;
};

struct CorpusResult {
  std::vector<CorpusRow> rows;
  bool all_passed() const {
    for (const auto& r : rows)
      if (r.status == "FAIL") return false;
    return true;
  }
};

/// Run every (name, len) expectation from the expectations file against the
/// problem files in dir; rows exceeding the per-row budget are SKIP.
CorpusResult corpus_run(const std::string& dir, const std::string& expect_path,
                        const RunConfig& base, int workers = 1);

std::string format_corpus(const CorpusResult& res, bool kv);

}  // namespace imx
