#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "imx/report.hpp"

using namespace imx;

namespace {

std::string corpus_dir() { return IMX_CORPUS_DIR; }

std::string corpus(const std::string& name) { return corpus_dir() + "/" + name + ".prob"; }

}  // namespace

TEST_CASE("run_problem dispatches every algorithm on the trivial input") {
  ParamSystem sys = load_problem_file(corpus("trivial"));
  for (const char* name : {"elimth", "direct", "ratpar-elimth", "ratpar-direct", "classical",
                           "modular-elimth", "modular-direct", "single-prime"}) {
    RunConfig cfg;
    cfg.alg = *algorithm_from_name(name);
    cfg.verify = true;
    RunReport rep = run_problem(sys, "trivial", cfg);
    CHECK(rep.len == 2);
    REQUIRE(rep.verified.has_value());
    CHECK(*rep.verified);
    CHECK(report_exit_code(rep) == 0);
  }
}

TEST_CASE("char override and rational routing") {
  ParamSystem sys = load_problem_file(corpus("t2t3t4"));
  RunConfig cfg;
  cfg.alg = Algorithm::Direct;
  cfg.characteristic = 32003;
  cfg.verify = true;
  RunReport rep = run_problem(sys, "t2t3t4", cfg);
  CHECK(rep.characteristic == 32003);
  CHECK(rep.len == 2);
  REQUIRE(rep.verified.has_value());
  CHECK(*rep.verified);
  bool routed = false;
  for (const auto& n : rep.notes)
    if (n.find("ratpar") != std::string::npos) routed = true;
  CHECK(routed);
}

TEST_CASE("reported len survives a render/parse round trip") {
  ParamSystem sys = load_problem_file(corpus("dandrea"));
  RunConfig cfg;
  cfg.alg = Algorithm::ElimTH;
  cfg.characteristic = 0;
  RunReport rep = run_problem(sys, "dandrea", cfg);
  CHECK(rep.len == 6);
  RingPtr xr = make_simple_ring({"x1", "x2", "x3"}, 0);
  auto [num, den] = parse_fraction(rep.result_text, xr);
  CHECK(num.support_size() == rep.len);
}

TEST_CASE("modular run reports prime log and count") {
  ParamSystem sys = load_problem_file(corpus("badprimes"));
  RunConfig cfg;
  cfg.alg = Algorithm::ModularDirect;
  cfg.characteristic = 0;
  RunReport rep = run_problem(sys, "badprimes", cfg);
  CHECK(rep.len == 10);
  REQUIRE(rep.primes_used.has_value());
  CHECK(*rep.primes_used >= 2);
  CHECK_FALSE(rep.modular_log.empty());
  CHECK(format_report(rep, true).find("primes\t") != std::string::npos);
}

TEST_CASE("modular methods reject positive characteristic") {
  ParamSystem sys = load_problem_file(corpus("trivial"));
  RunConfig cfg;
  cfg.alg = Algorithm::ModularDirect;
  cfg.characteristic = 32003;
  CHECK_THROWS(run_problem(sys, "trivial", cfg));
}

TEST_CASE("corpus runner: pass, fail and skip rows") {
  std::string expect = std::string("/tmp/imx_test_expect_") + std::to_string(getpid()) + ".tsv";
  {
    std::ofstream out(expect);
    out << "trivial\t2\n";
    out << "dandrea\t6\n";
    out << "badprimes\t11\n";  // deliberately wrong
  }
  RunConfig cfg;
  cfg.alg = Algorithm::Direct;
  cfg.characteristic = 32003;
  cfg.budget_seconds = 60;
  CorpusResult res = corpus_run(corpus_dir(), expect, cfg, 2);
  REQUIRE(res.rows.size() == 3);
  CHECK(res.rows[0].status == "PASS");
  CHECK(res.rows[1].status == "PASS");
  CHECK(res.rows[2].status == "FAIL");
  CHECK_FALSE(res.all_passed());
  std::string table = format_corpus(res, false);
  CHECK(table.find("badprimes") != std::string::npos);
  std::remove(expect.c_str());

  // empty corpus -> empty table
  {
    std::ofstream out(expect);
  }
  CorpusResult empty = corpus_run(corpus_dir(), expect, cfg, 1);
  CHECK(empty.rows.empty());
  CHECK(empty.all_passed());
  std::remove(expect.c_str());
}

TEST_CASE("budget exceeded rows are SKIP") {
  std::string expect = std::string("/tmp/imx_test_expect2_") + std::to_string(getpid()) + ".tsv";
  {
    std::ofstream out(expect);
    out << "wang\t715\n";
  }
  RunConfig cfg;
  cfg.alg = Algorithm::ElimTH;
  cfg.characteristic = 32003;
  cfg.budget_seconds = 0.005;  // far too tight on purpose
  CorpusResult res = corpus_run(corpus_dir(), expect, cfg, 1);
  REQUIRE(res.rows.size() == 1);
  CHECK(res.rows[0].status == "SKIP");
  CHECK(res.all_passed());  // SKIP is not a failure
  std::remove(expect.c_str());
}
