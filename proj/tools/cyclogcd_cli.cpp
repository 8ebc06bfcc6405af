// cyclogcd command-line front end. Talks to the library only through the C API.

#include "cyclogcd/cyclogcd.h"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

namespace {

constexpr const char* kThreadsEnv = "CYCLOGCD_THREADS";

struct Common {
  std::string format = "json";
  std::string output;
  unsigned threads = 1;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--output,-o", c.output, "Write the report to this file instead of stdout");
  sub->add_option("--threads", c.threads, "Worker threads (0 = hardware); overrides " + std::string(kThreadsEnv));
}

int exit_code(cg_status status) {
  switch (status) {
    case CG_OK: return 0;
    case CG_ERR_INVALID_ARGUMENT:
    case CG_ERR_HYPOTHESIS: return 1;
    case CG_ERR_VERIFICATION:
    case CG_ERR_INTERNAL: return 2;
  }
  return 2;
}

unsigned threads_from_env(unsigned fallback) {
  const char* raw = std::getenv(kThreadsEnv);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v > 4096) {
    std::cerr << "warning: ignoring " << kThreadsEnv << "=" << raw << "\n";
    return fallback;
  }
  return static_cast<unsigned>(v);
}

using Runner = std::function<cg_status(cg_session*, cg_format, cg_report**)>;

int execute(const Common& c, bool threads_given, const Runner& runner) {
  const unsigned threads = threads_given ? c.threads : threads_from_env(c.threads);
  cg_session* session = cg_session_create(threads);
  if (session == nullptr) {
    std::cerr << "error: could not allocate a session\n";
    return 2;
  }
  const cg_format fmt = c.format == "csv" ? CG_FORMAT_CSV : CG_FORMAT_JSON;
  cg_report* report = nullptr;
  const cg_status status = runner(session, fmt, &report);
  int code = exit_code(status);
  if (status != CG_OK) {
    std::cerr << "error (" << cg_status_name(status) << "): " << cg_session_last_error(session) << "\n";
  } else if (c.output.empty()) {
    std::fwrite(cg_report_data(report), 1, cg_report_size(report), stdout);
    std::fflush(stdout);
  } else {
    std::ofstream out(c.output, std::ios::binary);
    out.write(cg_report_data(report), static_cast<std::streamsize>(cg_report_size(report)));
    if (!out) {
      std::cerr << "error: could not write " << c.output << "\n";
      code = 2;
    }
  }
  cg_report_destroy(report);
  cg_session_destroy(session);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments on gcds of cyclotomic values"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cg_version()));
  Common common;
  Runner runner;
  auto track = [&](CLI::App* sub) {
    add_common(sub, common);
    return sub;
  };

  cg_gcd_seq_args gs{2, 3, 1, 1, 10};
  auto* gcd_seq = track(app.add_subcommand("gcd-seq", "Exact gcd(Phi_M(a^n), Phi_N(b^n)) for n = 1..n-max"));
  gcd_seq->add_option("--a", gs.a)->capture_default_str();
  gcd_seq->add_option("--b", gs.b)->capture_default_str();
  gcd_seq->add_option("--M", gs.M)->capture_default_str();
  gcd_seq->add_option("--N", gs.N)->capture_default_str();
  gcd_seq->add_option("--n-max", gs.n_max)->capture_default_str();
  gcd_seq->callback([&] { runner = [&](cg_session* s, cg_format f, cg_report** r) { return cg_run_gcd_seq(s, &gs, f, r); }; });

  cg_champion_args ch{2, 3, 2, 0, 10000, 0.9, 1.0};
  auto* champion = track(app.add_subcommand("champion", "Pigeonhole search for n with many certified common primes"));
  champion->add_option("--a", ch.a)->capture_default_str();
  champion->add_option("--b", ch.b)->capture_default_str();
  champion->add_option("--N", ch.N)->capture_default_str();
  champion->add_option("--M", ch.M, "Index applied to a (default: N)");
  champion->add_option("--x", ch.x)->capture_default_str();
  champion->add_option("--delta", ch.delta)->capture_default_str();
  champion->add_option("--curve-c", ch.curve_c, "Constant of the reference curve")->capture_default_str();
  champion->callback([&] { runner = [&](cg_session* s, cg_format f, cg_report** r) { return cg_run_champion(s, &ch, f, r); }; });

  cg_density_args de{2, 1, 2, 3, 1000000};
  auto* density = track(app.add_subcommand("density", "Predicted and empirical density of qualifying primes"));
  density->add_option("--N", de.N)->capture_default_str();
  density->add_option("--d", de.d)->capture_default_str();
  density->add_option("--a", de.a)->capture_default_str();
  density->add_option("--b", de.b)->capture_default_str();
  density->add_option("--x", de.x)->capture_default_str();
  density->callback([&] { runner = [&](cg_session* s, cg_format f, cg_report** r) { return cg_run_density(s, &de, f, r); }; });

  cg_delta_args dl{100, 0};
  bool squarefree = false;
  auto* delta = track(app.add_subcommand("delta", "Count divisors d of n with d + 1 prime"));
  delta->add_option("--limit", dl.limit)->capture_default_str();
  delta->add_flag("--squarefree", squarefree, "Also count squarefree d");
  delta->callback([&] {
    dl.squarefree = squarefree ? 1 : 0;
    runner = [&](cg_session* s, cg_format f, cg_report** r) { return cg_run_delta(s, &dl, f, r); };
  });

  cg_lemma_args lm{2, 3, 5, 20000, 20};
  auto* lemma = track(app.add_subcommand("verify-lemma", "Check the divisibility criterion over a prime range"));
  lemma->add_option("--N", lm.N)->capture_default_str();
  lemma->add_option("--a", lm.a)->capture_default_str();
  lemma->add_option("--b", lm.b)->capture_default_str();
  lemma->add_option("--p-max", lm.p_max)->capture_default_str();
  lemma->add_option("--m-max", lm.m_max)->capture_default_str();
  lemma->callback([&] { runner = [&](cg_session* s, cg_format f, cg_report** r) { return cg_run_verify_lemma(s, &lm, f, r); }; });

  std::string a_poly = "0,1", b_poly = "1,1";
  cg_ff_args ffa{2, 1, 1, 3, 0, nullptr, nullptr, 1, 4, 0, 5000};
  auto add_ff = [&](CLI::App* sub, bool verify) {
    sub->add_option("--q", ffa.q)->capture_default_str();
    sub->add_option("--k", ffa.k)->capture_default_str();
    sub->add_option("--n0", ffa.n0)->capture_default_str();
    sub->add_option("--m", ffa.m)->capture_default_str();
    sub->add_option("--v", ffa.v, "Index applied to b (default: m)");
    sub->add_option("--a-poly", a_poly, "Coefficients of a, constant term first")->capture_default_str();
    sub->add_option("--b-poly", b_poly, "Coefficients of b, constant term first")->capture_default_str();
    sub->add_option("--deg-min", ffa.deg_min)->capture_default_str();
    sub->add_option("--deg-max", ffa.deg_max)->capture_default_str();
    if (verify) sub->add_option("--n-cap", ffa.n_cap, "Largest n for exact gcd computation")->capture_default_str();
    sub->callback([&, verify] {
      ffa.a_poly = a_poly.c_str();
      ffa.b_poly = b_poly.c_str();
      ffa.verify = verify ? 1 : 0;
      runner = [&](cg_session* s, cg_format f, cg_report** r) { return cg_run_ff(s, &ffa, f, r); };
    });
  };
  add_ff(track(app.add_subcommand("ff", "Scan irreducibles over F_Q meeting the power criterion")), false);
  add_ff(track(app.add_subcommand("ff-verify", "ff plus exact gcd degrees and a criterion cross-check")), true);

  cg_monitor_args mo{2, 3, 100, 2000};
  auto* monitor = track(app.add_subcommand("monitor", "max of log gcd(a^n - 1, b^n - 1) / n over a range"));
  monitor->add_option("--a", mo.a)->capture_default_str();
  monitor->add_option("--b", mo.b)->capture_default_str();
  monitor->add_option("--n-min", mo.n_min)->capture_default_str();
  monitor->add_option("--n-max", mo.n_max)->capture_default_str();
  monitor->callback([&] { runner = [&](cg_session* s, cg_format f, cg_report** r) { return cg_run_monitor(s, &mo, f, r); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  bool threads_given = false;
  for (CLI::App* sub : app.get_subcommands())
    if (CLI::Option* opt = sub->get_option_no_throw("--threads")) threads_given = threads_given || opt->count() > 0;
  return execute(common, threads_given, runner);
}
