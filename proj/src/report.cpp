#include "imx/report.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace imx {

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
  if (name == "elimth") return Algorithm::ElimTH;
  if (name == "direct") return Algorithm::Direct;
  if (name == "ratpar-elimth") return Algorithm::RatParElimTH;
  if (name == "ratpar-direct") return Algorithm::RatParDirect;
  if (name == "classical") return Algorithm::Classical;
  if (name == "modular-elimth") return Algorithm::ModularElimTH;
  if (name == "modular-direct") return Algorithm::ModularDirect;
  if (name == "single-prime") return Algorithm::SinglePrime;
  return std::nullopt;
}

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::ElimTH: return "elimth";
    case Algorithm::Direct: return "direct";
    case Algorithm::RatParElimTH: return "ratpar-elimth";
    case Algorithm::RatParDirect: return "ratpar-direct";
    case Algorithm::Classical: return "classical";
    case Algorithm::ModularElimTH: return "modular-elimth";
    case Algorithm::ModularDirect: return "modular-direct";
    case Algorithm::SinglePrime: return "single-prime";
  }
  return "?";
}

namespace {

// Full substitution check over the run's own field.
template <class K>
bool verified_substitution(const Polynomial<K>& g, const SysView<K>& sys) {
  if (g.is_zero()) return false;
  return substitute_cleared(g, sys.numer, sys.denom).is_zero();
}

struct EngineOutcome {
  std::vector<std::string> gens;  // rendered
  size_t len = 0;
  std::optional<bool> verified;
  std::optional<size_t> primes_used;
  std::vector<std::string> warnings;
  std::vector<std::string> modular_log;
  std::vector<std::string> notes;
};

template <class K>
EngineOutcome run_field(const SysView<K>& view, const RunConfig& cfg, const Budget& budget,
                        bool do_verify) {
  EngineOutcome out;
  Algorithm alg = cfg.alg;
  // Plain engines on a rational input route through RatPar.
  if (!view.polynomial_case()) {
    if (alg == Algorithm::ElimTH) {
      alg = Algorithm::RatParElimTH;
      out.notes.push_back("rational parametrization: routed through ratpar-elimth");
    } else if (alg == Algorithm::Direct) {
      alg = Algorithm::RatParDirect;
      out.notes.push_back("rational parametrization: routed through ratpar-direct");
    }
  }
  auto single = [&](Polynomial<K> g, std::vector<std::string> warnings) {
    out.len = g.support_size();
    out.gens.push_back(render(g));
    out.warnings = std::move(warnings);
    if (do_verify) out.verified = verified_substitution(g, view);
  };
  switch (alg) {
    case Algorithm::ElimTH: {
      GBOptions<K> opts;
      opts.budget = budget;
      auto r = elim_th(view, opts);
      single(std::move(r.g), std::move(r.warnings));
      break;
    }
    case Algorithm::Direct: {
      DirectOptions opts;
      opts.budget = budget;
      opts.max_degree = cfg.max_degree;
      opts.sigma = build_direct_ordering(view);
      auto r = direct(view, opts);
      Polynomial<K> g =
          monic(to_ring(r.g, output_xring(view, view.tring->characteristic)));
      single(std::move(g), std::move(r.warnings));
      break;
    }
    case Algorithm::RatParElimTH:
    case Algorithm::RatParDirect: {
      auto r = rat_par(view, alg == Algorithm::RatParElimTH ? Engine::ElimTH : Engine::Direct,
                       budget);
      single(std::move(r.g), std::move(r.warnings));
      break;
    }
    case Algorithm::Classical: {
      auto gens = classical_implicitization(view, budget);
      out.len = 0;
      bool all_ok = true;
      for (const auto& g : gens) {
        out.gens.push_back(render(g));
        out.len += g.support_size();
        if (do_verify) all_ok = all_ok && verified_substitution(g, view);
      }
      if (do_verify) out.verified = all_ok;
      if (gens.size() != 1)
        out.notes.push_back("ideal is not principal: " + std::to_string(gens.size()) +
                            " generators");
      break;
    }
    default:
      throw Error("algorithm requires characteristic 0");
  }
  return out;
}

EngineOutcome run_modular(const ParamSystem& sys, const RunConfig& cfg, const Budget& budget,
                          bool do_verify) {
  EngineOutcome out;
  if (cfg.alg == Algorithm::SinglePrime) {
    uint64_t p = 0;
    for (uint64_t cand : prime_pool(cfg.primes_start, cfg.primes_count))
      if (classify_prime(sys, cand).suitable()) {
        p = cand;
        break;
      }
    if (!p) throw PrimePoolExhausted();
    auto r = single_prime_guess(sys, p, Engine::Direct, cfg.seed);
    if (!r.ok) throw Error("single-prime method failed: " + r.failure);
    out.len = r.g.support_size();
    out.gens.push_back(render(r.g));
    out.primes_used = 1;
    if (do_verify) out.verified = true;  // verification is part of the method
    return out;
  }
  ModularOptions mo;
  mo.engine = cfg.alg == Algorithm::ModularElimTH ? Engine::ElimTH : Engine::Direct;
  mo.pool = prime_pool(cfg.primes_start, cfg.primes_count);
  mo.seed = cfg.seed;
  mo.budget = budget;
  auto r = mod_implicit(sys, mo);
  out.len = r.g.support_size();
  out.gens.push_back(render(r.g));
  out.primes_used = r.primes_used;
  out.warnings = r.warnings;
  for (const auto& e : r.log) {
    std::ostringstream os;
    os << "prime=" << e.p << " class=" << e.classification << " filter=" << e.filter
       << " recon=" << e.recon << " len=" << e.support;
    out.modular_log.push_back(os.str());
  }
  if (do_verify) out.verified = true;  // the loop exits only after verification
  return out;
}

}  // namespace

RunReport run_problem(const ParamSystem& sys, const std::string& input_id, const RunConfig& cfg) {
  RunReport rep;
  rep.input_id = input_id;
  rep.algorithm = algorithm_name(cfg.alg);
  rep.characteristic = cfg.characteristic >= 0 ? cfg.characteristic : sys.characteristic;
  Budget budget = cfg.budget_seconds > 0 ? Budget::seconds(cfg.budget_seconds) : Budget::none();

  bool modular = cfg.alg == Algorithm::ModularElimTH || cfg.alg == Algorithm::ModularDirect ||
                 cfg.alg == Algorithm::SinglePrime;
  if (modular && rep.characteristic != 0)
    throw Error("modular and single-prime methods require characteristic 0");

  auto t0 = std::chrono::steady_clock::now();
  EngineOutcome out;
  if (modular) {
    out = run_modular(sys, cfg, budget, cfg.verify);
  } else if (rep.characteristic == 0) {
    out = run_field<Rat>(view_q(sys), cfg, budget, cfg.verify);
  } else {
    out = run_field<Fp>(view_fp(sys, static_cast<uint32_t>(rep.characteristic)), cfg, budget,
                        cfg.verify);
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.seconds = std::chrono::duration<double>(t1 - t0).count();

  std::ostringstream rtext;
  for (size_t i = 0; i < out.gens.size(); ++i) {
    if (i) rtext << " ; ";
    rtext << out.gens[i];
  }
  rep.result_text = rtext.str();
  rep.len = out.len;
  rep.verified = out.verified;
  rep.primes_used = out.primes_used;
  rep.warnings = out.warnings;
  rep.modular_log = out.modular_log;
  rep.notes = out.notes;
  for (const auto& [name, value] : sys.split_constants)
    rep.notes.push_back("constant coordinate split off: " + name + " = " + value);
  return rep;
}

std::string format_report(const RunReport& rep, bool kv) {
  std::ostringstream os;
  if (kv) {
    os << "input\t" << rep.input_id << "\n";
    os << "algorithm\t" << rep.algorithm << "\n";
    os << "char\t" << rep.characteristic << "\n";
    os << "time_s\t" << std::fixed << std::setprecision(3) << rep.seconds << "\n";
    os << "len\t" << rep.len << "\n";
    if (rep.verified) os << "verified\t" << (*rep.verified ? "yes" : "no") << "\n";
    if (rep.primes_used) os << "primes\t" << *rep.primes_used << "\n";
    os << "result\t" << rep.result_text << "\n";
    for (const auto& l : rep.modular_log) os << "prime_log\t" << l << "\n";
    for (const auto& n : rep.notes) os << "note\t" << n << "\n";
    for (const auto& w : rep.warnings) os << "warning\t" << w << "\n";
    return os.str();
  }
  os << "input:     " << rep.input_id << "\n";
  os << "algorithm: " << rep.algorithm << "\n";
  os << "char:      " << rep.characteristic << "\n";
  os << "time:      " << std::fixed << std::setprecision(3) << rep.seconds << " s\n";
  os << "len:       " << rep.len << "\n";
  if (rep.verified) os << "verified:  " << (*rep.verified ? "yes" : "no") << "\n";
  if (rep.primes_used) os << "primes:    " << *rep.primes_used << "\n";
  os << "result:    " << rep.result_text << "\n";
  for (const auto& l : rep.modular_log) os << "  " << l << "\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
  return os.str();
}

int report_exit_code(const RunReport& rep) {
  if (rep.verified && !*rep.verified) return 4;
  return 0;
}

CorpusResult corpus_run(const std::string& dir, const std::string& expect_path,
                        const RunConfig& base, int workers) {
  std::ifstream in(expect_path);
  if (!in) throw Error("cannot open expectations file: " + expect_path);
  std::vector<std::pair<std::string, size_t>> expectations;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw Error("expectations line without a tab: " + line);
    expectations.emplace_back(line.substr(0, tab), std::stoul(line.substr(tab + 1)));
  }

  CorpusResult res;
  res.rows.resize(expectations.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= expectations.size()) return;
      const auto& [name, expected] = expectations[i];
      CorpusRow row;
      row.name = name;
      row.expected_len = expected;
      RunConfig cfg = base;
      cfg.verify = true;  // every corpus emission is verified
      try {
        ParamSystem sys = load_problem_file(dir + "/" + name + ".prob");
        row.report = run_problem(sys, name, cfg);
        bool len_ok = row.report.len == expected;
        bool ver_ok = !row.report.verified || *row.report.verified;
        row.status = (len_ok && ver_ok) ? "PASS" : "FAIL";
        if (!len_ok)
          row.message = "len " + std::to_string(row.report.len) + " != expected " +
                        std::to_string(expected);
        else if (!ver_ok)
          row.message = "verification failed";
      } catch (const BudgetExceeded&) {
        row.status = "SKIP";
        row.message = "budget exceeded";
      } catch (const std::exception& e) {
        row.status = "FAIL";
        row.message = e.what();
      }
      res.rows[i] = std::move(row);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return res;
}

std::string format_corpus(const CorpusResult& res, bool kv) {
  std::ostringstream os;
  if (kv) {
    for (const auto& r : res.rows) {
      os << "row\t" << r.name << "\tstatus=" << r.status << "\tlen=" << r.report.len
         << "\texpected=" << r.expected_len << "\ttime_s=" << std::fixed << std::setprecision(3)
         << r.report.seconds;
      if (!r.message.empty()) os << "\tmessage=" << r.message;
      os << "\n";
    }
    return os.str();
  }
  os << std::left << std::setw(12) << "example" << std::setw(8) << "status" << std::right
     << std::setw(8) << "len" << std::setw(10) << "expected" << std::setw(10) << "time"
     << "  message\n";
  for (const auto& r : res.rows) {
    os << std::left << std::setw(12) << r.name << std::setw(8) << r.status << std::right
       << std::setw(8) << r.report.len << std::setw(10) << r.expected_len << std::setw(9)
       << std::fixed << std::setprecision(2) << r.report.seconds << "s"
       << "  " << r.message << "\n";
  }
  return os.str();
}

}  // namespace imx
