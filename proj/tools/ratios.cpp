// Command-line front end: self-checks, predictions, empirical sweeps and reports.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <pthread.h>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unistd.h>
#include <vector>

#include "CLI11.hpp"
#include "ratios/empirical.hpp"
#include "ratios/error.hpp"
#include "ratios/harness.hpp"
#include "ratios/predict.hpp"

using namespace ratios;

namespace {

std::atomic<LCache*> g_cache{nullptr};

// SIGINT/SIGTERM are blocked in every thread and consumed here, so the cache
// can be flushed outside of signal context.
void start_signal_watcher() {
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);
  std::thread([set] {
    int sig = 0;
    if (sigwait(&set, &sig) != 0) return;
    if (LCache* c = g_cache.load()) {
      try {
        c->flush();
      } catch (...) {
      }
    }
    std::fprintf(stderr, "interrupted\n");
    std::_Exit(128 + sig);
  }).detach();
}

Complex parse_complex(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (ch != ' ') t += ch;
  }
  if (t.empty()) throw Error(Errc::usage, "empty shift");
  char* end = nullptr;
  double re = std::strtod(t.c_str(), &end);
  std::string rest(end);
  if (rest.empty()) return {re, 0.0};
  if (rest == "i" || rest == "+i" || rest == "-i") {
    if (end == t.c_str()) return {0.0, rest == "-i" ? -1.0 : 1.0};
    return {re, rest == "-i" ? -1.0 : 1.0};
  }
  if (rest.back() == 'i') {
    if (end == t.c_str()) throw Error(Errc::usage, "cannot parse shift '" + text + "'");
    char* end2 = nullptr;
    std::string im_part = rest.substr(0, rest.size() - 1);
    double im = std::strtod(im_part.c_str(), &end2);
    if (*end2 == '\0' && !im_part.empty()) return {re, im};
  }
  throw Error(Errc::usage, "cannot parse shift '" + text + "'");
}

std::string show(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::string show(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ShiftArgs {
  int theorem = 2;
  std::string alpha, beta, r;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* r_opt = nullptr;

  void add(CLI::App* sub) {
    sub->add_option("--theorem", theorem, "1 fundamental-discriminant ratio, 2 odd-moduli ratio, 3 odd-moduli log-derivative, 4 squarefree log-derivative")->check(CLI::Range(1, 4));
    alpha_opt = sub->add_option("--alpha", alpha, "Numerator shift (theorems 1, 2), e.g. 0.2 or 0.2+0.1i");
    beta_opt = sub->add_option("--beta", beta, "Denominator shift (theorems 1, 2)");
    r_opt = sub->add_option("--r", r, "Log-derivative shift (theorems 3, 4)");
  }

  // (alpha, beta) for theorems 1 and 2, (r, r) for 3 and 4
  std::pair<Complex, Complex> resolve() const {
    bool has_a = alpha_opt->count() > 0, has_b = beta_opt->count() > 0, has_r = r_opt->count() > 0;
    if (theorem <= 2) {
      if (!has_a || !has_b) throw Error(Errc::usage, "theorems 1 and 2 take --alpha and --beta");
      if (has_r) throw Error(Errc::usage, "--r belongs to theorems 3 and 4");
      return {parse_complex(alpha), parse_complex(beta)};
    }
    if (!has_r) throw Error(Errc::usage, "theorems 3 and 4 take --r");
    if (has_a || has_b) throw Error(Errc::usage, "theorems 3 and 4 take --r, not --alpha/--beta");
    Complex rv = parse_complex(r);
    return {rv, rv};
  }
};

struct SweepArgs {
  unsigned threads = 1;
  double cap_factor = 28.0;
  std::uint64_t tier = 1000;
  std::string cache;

  void add(CLI::App* sub) {
    sub->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--cap-factor", cap_factor, "Summation cutoff as a multiple of the largest X")
        ->check(CLI::Range(1.0, 1000.0));
    sub->add_option("--tier", tier, "Largest modulus evaluated by the Hurwitz route");
    sub->add_option("--cache", cache, "L-value cache file");
  }
};

Prediction predict_for(int theorem, double X, Complex a, Complex b) {
  switch (theorem) {
    case 1: return predict_thm1(X, a, b);
    case 2: return predict_thm2(X, a, b);
    case 3: return predict_thm3(X, a);
    default: return predict_thm4(X, a);
  }
}

void validate_shifts(int theorem, Complex a, Complex b) {
  bool ok = theorem == 1   ? valid_thm1(a, b)
            : theorem == 2 ? valid_thm2(a, b)
            : theorem == 3 ? valid_thm3(a)
                           : valid_thm4(a);
  if (!ok) throw Error(Errc::invalid_shifts, "shifts outside the range of theorem " + std::to_string(theorem));
}

// Applies config entries to the options of `sub` that were not given on the command line.
void apply_config(CLI::App& app, CLI::App* sub, const std::map<std::string, std::string>& cfg) {
  std::set<std::string> known;
  for (const CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; })) {
    for (const CLI::Option* o : s->get_options()) {
      for (const auto& n : o->get_lnames()) known.insert(n);
    }
  }
  for (const auto& [key, value] : cfg) {
    if (!known.count(key)) throw Error(Errc::usage, "unknown config key '" + key + "'");
  }
  for (CLI::Option* o : sub->get_options()) {
    if (o->count() > 0) continue;
    for (const auto& n : o->get_lnames()) {
      auto it = cfg.find(n);
      if (it == cfg.end()) continue;
      if (o->get_type_size_max() == 0) {
        if (it->second == "true" || it->second == "1") o->add_result("true");
      } else {
        std::stringstream ss(it->second);
        std::string part;
        if (o->get_expected_max() > 1) {
          while (std::getline(ss, part, ',')) o->add_result(part);
        } else {
          o->add_result(it->second);
        }
      }
      o->run_callback();
      break;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  start_signal_watcher();
  CLI::App app{"Ratios of quadratic Dirichlet L-functions: identities, predictions and sweeps"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "Flat key = value file mirroring the flags; flags win");

  auto* selfcheck = app.add_subcommand("selfcheck", "Run every identity suite");
  bool inject_fault = false;
  selfcheck->add_flag("--inject-fault", inject_fault, "Corrupt reference constants (must fail)");

  auto* verify = app.add_subcommand("verify", "Run one identity suite");
  std::string suite;
  verify->add_option("suite", suite, "gauss | funceq | theta | lemma24 | euler | gamma")
      ->required()
      ->check(CLI::IsMember({"gauss", "funceq", "theta", "lemma24", "euler", "gamma"}));
  bool verify_fault = false;
  verify->add_flag("--inject-fault", verify_fault, "Corrupt reference constants (must fail)");

  auto* predict = app.add_subcommand("predict", "Main terms of a theorem");
  ShiftArgs predict_shifts;
  predict_shifts.add(predict);
  std::vector<double> predict_xs;
  predict->add_option("--x-grid", predict_xs, "Comma-separated X values")->delimiter(',');

  auto* empirical_cmd = app.add_subcommand("empirical", "Smoothed sums over the theorem's family");
  ShiftArgs emp_shifts;
  emp_shifts.add(empirical_cmd);
  SweepArgs emp_sweep;
  emp_sweep.add(empirical_cmd);
  std::vector<double> emp_xs;
  empirical_cmd->add_option("--x-grid", emp_xs, "Comma-separated X values")->delimiter(',');

  auto* compare_cmd = app.add_subcommand("compare", "Empirical sums against main terms, as a CSV report");
  ShiftArgs cmp_shifts;
  cmp_shifts.add(compare_cmd);
  SweepArgs cmp_sweep;
  cmp_sweep.add(compare_cmd);
  std::vector<double> cmp_xs;
  compare_cmd->add_option("--x-grid", cmp_xs, "Ascending comma-separated X values")->delimiter(',');
  std::string out_path;
  compare_cmd->add_option("--out", out_path, "Report path (stdout when omitted)");

  auto* sieve_info = app.add_subcommand("sieve-info", "Build a factor sieve and report its size");
  std::uint64_t sieve_limit = 1'000'000;
  sieve_info->add_option("--limit", sieve_limit, "Sieve limit")->check(CLI::Range(std::uint64_t(1), std::uint64_t(4'000'000'000)));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw Error(Errc::io, "cannot read config " + config_path);
      try {
        apply_config(app, sub, parse_config(in));
      } catch (const CLI::Error& e) {
        throw Error(Errc::usage, std::string("config: ") + e.what());
      }
    }
    if ((sub == predict && predict_xs.empty()) || (sub == empirical_cmd && emp_xs.empty()) ||
        (sub == compare_cmd && cmp_xs.empty())) {
      throw Error(Errc::usage, "--x-grid is required");
    }

    if (sub == selfcheck) {
      CheckOptions opt;
      if (inject_fault) opt.corruption = 1e-4;
      return run_selfcheck(std::cout, opt) ? 0 : 1;
    }
    if (sub == verify) {
      CheckOptions opt;
      if (verify_fault) opt.corruption = 1e-4;
      return run_verify(suite, std::cout, opt) ? 0 : 1;
    }
    if (sub == predict) {
      auto [a, b] = predict_shifts.resolve();
      validate_shifts(predict_shifts.theorem, a, b);
      std::cout << "X,t1_re,t1_im,t2_re,t2_im,total_re,total_im,error_exponent\n";
      for (double X : predict_xs) {
        Prediction p = predict_for(predict_shifts.theorem, X, a, b);
        std::cout << show(X) << ',' << show(p.term1.real()) << ',' << show(p.term1.imag()) << ','
                  << show(p.term2.real()) << ',' << show(p.term2.imag()) << ',' << show(p.total().real()) << ','
                  << show(p.total().imag()) << ',' << show(p.error_exponent) << '\n';
      }
      return 0;
    }
    if (sub == sieve_info) {
      auto t0 = std::chrono::steady_clock::now();
      FactorSieve sieve{std::uint32_t(sieve_limit)};
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      auto primes = sieve.primes();
      std::cout << "limit: " << sieve.limit() << '\n'
                << "primes: " << primes.size() << '\n'
                << "largest_prime: " << (primes.empty() ? 0 : primes.back()) << '\n'
                << "approx_bytes: " << (sieve_limit + 1) * 4 + primes.size() * 4 << '\n'
                << "build_seconds: " << secs << '\n';
      return 0;
    }

    // empirical and compare share the sweep setup
    ShiftArgs& shifts = sub == compare_cmd ? cmp_shifts : emp_shifts;
    SweepArgs& sw = sub == compare_cmd ? cmp_sweep : emp_sweep;
    std::vector<double>& xs = sub == compare_cmd ? cmp_xs : emp_xs;
    auto [a, b] = shifts.resolve();
    validate_shifts(shifts.theorem, a, b);
    for (double X : xs) {
      if (!(X > 0.0)) throw Error(Errc::usage, "X must be positive");
    }
    SweepConfig cfg;
    cfg.theorem = shifts.theorem;
    cfg.alpha = a;
    cfg.beta = b;
    cfg.cap_factor = sw.cap_factor;
    cfg.levels.hurwitz_tier = sw.tier;
    cfg.workers = sw.threads;
    std::unique_ptr<LCache> cache;
    if (!sw.cache.empty()) {
      cache = std::make_unique<LCache>(sw.cache);
      g_cache.store(cache.get());
      cfg.memo = cache.get();
    }
    double x_max = *std::max_element(xs.begin(), xs.end());
    FactorSieve sieve{std::uint32_t(std::ceil(cfg.cap_factor * x_max))};

    if (sub == empirical_cmd) {
      auto vals = empirical_sweep(cfg, xs, sieve);
      std::cout << "X,emp_re,emp_im\n";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        std::cout << show(xs[i]) << ',' << show(vals[i].real()) << ',' << show(vals[i].imag()) << '\n';
      }
    } else {
      auto report = compare(cfg, xs, sieve);
      std::string grid;
      for (double X : xs) grid += (grid.empty() ? "" : ";") + show(X);
      Metadata meta = {{"alpha", show(cfg.alpha)},
                       {"beta", show(report.rows.empty() ? cfg.beta : report.rows.front().beta)},
                       {"x_grid", grid},
                       {"weight", "exp(-x)"},
                       {"cap_factor", show(cfg.cap_factor)},
                       {"hurwitz_tier", std::to_string(sw.tier)},
                       {"threads", std::to_string(sw.threads)},
                       {"prime_cutoff", std::to_string(EulerSpec{}.prime_cutoff)}};
      if (out_path.empty()) {
        write_report(std::cout, report, meta);
      } else {
        std::ofstream out(out_path);
        if (!out) throw Error(Errc::io, "cannot write report " + out_path);
        write_report(out, report, meta);
        if (!out) throw Error(Errc::io, "write failed for report " + out_path);
      }
    }
    if (cache) {
      cache->flush();
      g_cache.store(nullptr);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
