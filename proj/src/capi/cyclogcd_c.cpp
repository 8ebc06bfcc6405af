#include "cyclogcd/cyclogcd.h"

#include "cyclogcd/errors.hpp"
#include "cyclogcd/oracles.hpp"
#include "cyclogcd/parallel.hpp"
#include "cyclogcd/report.hpp"
#include "cyclogcd/residue.hpp"

#include <memory>
#include <new>
#include <string>

struct cg_session {
  unsigned threads = 1;
  std::string last_error;
};

struct cg_report {
  std::string text;
};

namespace {

// Runs fn, mapping library exceptions onto status codes.
template <class Fn>
cg_status guarded(cg_session* s, Fn&& fn) {
  if (s == nullptr) return CG_ERR_INVALID_ARGUMENT;
  try {
    fn();
    s->last_error.clear();
    return CG_OK;
  } catch (const cyclogcd::InvalidArgument& e) {
    s->last_error = e.what();
    return CG_ERR_INVALID_ARGUMENT;
  } catch (const cyclogcd::HypothesisViolation& e) {
    s->last_error = e.what();
    return CG_ERR_HYPOTHESIS;
  } catch (const cyclogcd::VerificationFailure& e) {
    s->last_error = e.what();
    return CG_ERR_VERIFICATION;
  } catch (const std::bad_alloc&) {
    s->last_error = "out of memory";
    return CG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return CG_ERR_INTERNAL;
  }
}

cg_status run(cg_session* s, const cyclogcd::RunConfig& config, cg_format fmt, cg_report** out) {
  if (out == nullptr) {
    if (s) s->last_error = "output pointer is null";
    return CG_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded(s, [&] {
    if (fmt != CG_FORMAT_JSON && fmt != CG_FORMAT_CSV) throw cyclogcd::InvalidArgument("unknown report format");
    cyclogcd::RunOptions options;
    options.format = fmt == CG_FORMAT_CSV ? cyclogcd::Format::Csv : cyclogcd::Format::Json;
    options.threads = s->threads;
    auto report = std::make_unique<cg_report>();
    report->text = cyclogcd::run_report(config, options);
    *out = report.release();
  });
}

cg_status null_args(cg_session* s) {
  if (s) s->last_error = "argument struct is null";
  return CG_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* cg_version(void) { return cyclogcd::library_version(); }

const char* cg_status_name(cg_status status) {
  switch (status) {
    case CG_OK: return "ok";
    case CG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CG_ERR_HYPOTHESIS: return "hypothesis violation";
    case CG_ERR_VERIFICATION: return "verification failure";
    case CG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

cg_session* cg_session_create(unsigned threads) {
  auto* s = new (std::nothrow) cg_session;
  if (s) s->threads = cyclogcd::resolve_threads(threads);
  return s;
}

void cg_session_destroy(cg_session* session) { delete session; }

void cg_session_set_threads(cg_session* session, unsigned threads) {
  if (session) session->threads = cyclogcd::resolve_threads(threads);
}

unsigned cg_session_threads(const cg_session* session) { return session ? session->threads : 0; }

const char* cg_session_last_error(const cg_session* session) {
  return session ? session->last_error.c_str() : "null session";
}

const char* cg_report_data(const cg_report* report) { return report ? report->text.c_str() : ""; }
size_t cg_report_size(const cg_report* report) { return report ? report->text.size() : 0; }
void cg_report_destroy(cg_report* report) { delete report; }

cg_status cg_run_gcd_seq(cg_session* s, const cg_gcd_seq_args* args, cg_format fmt, cg_report** out) {
  if (!args) return null_args(s);
  return run(s, cyclogcd::GcdSeqConfig{args->a, args->b, args->M, args->N, args->n_max}, fmt, out);
}

cg_status cg_run_champion(cg_session* s, const cg_champion_args* args, cg_format fmt, cg_report** out) {
  if (!args) return null_args(s);
  cyclogcd::ChampionConfig c;
  c.params.a = args->a;
  c.params.b = args->b;
  c.params.N = args->N;
  c.params.M = args->M;
  c.params.x = args->x;
  c.params.delta = args->delta;
  c.params.curve_c = args->curve_c;
  return run(s, c, fmt, out);
}

cg_status cg_run_density(cg_session* s, const cg_density_args* args, cg_format fmt, cg_report** out) {
  if (!args) return null_args(s);
  return run(s, cyclogcd::DensityConfig{args->N, args->d, args->a, args->b, args->x}, fmt, out);
}

cg_status cg_run_delta(cg_session* s, const cg_delta_args* args, cg_format fmt, cg_report** out) {
  if (!args) return null_args(s);
  return run(s, cyclogcd::DeltaConfig{args->limit, args->squarefree != 0}, fmt, out);
}

cg_status cg_run_verify_lemma(cg_session* s, const cg_lemma_args* args, cg_format fmt, cg_report** out) {
  if (!args) return null_args(s);
  return run(s, cyclogcd::LemmaConfig{args->N, args->a, args->b, args->p_max, args->m_max}, fmt, out);
}

cg_status cg_run_ff(cg_session* s, const cg_ff_args* args, cg_format fmt, cg_report** out) {
  if (!args) return null_args(s);
  if (!args->a_poly || !args->b_poly) {
    if (s) s->last_error = "polynomial text is null";
    return CG_ERR_INVALID_ARGUMENT;
  }
  cyclogcd::FFConfig c;
  c.params = cyclogcd::ff::FFParams{args->q, args->k, args->n0, args->m, args->v};
  c.a_poly = args->a_poly;
  c.b_poly = args->b_poly;
  c.deg_min = args->deg_min;
  c.deg_max = args->deg_max;
  c.verify = args->verify != 0;
  c.n_cap = args->n_cap;
  return run(s, c, fmt, out);
}

cg_status cg_run_monitor(cg_session* s, const cg_monitor_args* args, cg_format fmt, cg_report** out) {
  if (!args) return null_args(s);
  return run(s, cyclogcd::MonitorConfig{args->a, args->b, args->n_min, args->n_max}, fmt, out);
}

cg_status cg_euler_phi(cg_session* s, uint64_t n, uint64_t* out) {
  return guarded(s, [&] {
    if (!out) throw cyclogcd::InvalidArgument("output pointer is null");
    if (n == 0) throw cyclogcd::InvalidArgument("euler_phi needs n >= 1");
    *out = cyclogcd::euler_phi(n);
  });
}

cg_status cg_mult_order(cg_session* s, uint64_t a, uint64_t p, uint64_t* out) {
  return guarded(s, [&] {
    if (!out) throw cyclogcd::InvalidArgument("output pointer is null");
    if (!cyclogcd::is_prime(p)) throw cyclogcd::InvalidArgument("modulus must be prime");
    *out = cyclogcd::mult_order(a, p);
  });
}

cg_status cg_is_lth_power_mod(cg_session* s, uint64_t a, uint64_t l, uint64_t p, int* out) {
  return guarded(s, [&] {
    if (!out) throw cyclogcd::InvalidArgument("output pointer is null");
    *out = cyclogcd::is_lth_power_mod(a, l, p) ? 1 : 0;
  });
}

cg_status cg_delta_count(cg_session* s, uint64_t n, uint64_t* out) {
  return guarded(s, [&] {
    if (!out) throw cyclogcd::InvalidArgument("output pointer is null");
    *out = cyclogcd::delta_count(n);
  });
}

}  // extern "C"
