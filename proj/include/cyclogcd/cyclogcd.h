#ifndef CYCLOGCD_CYCLOGCD_H
#define CYCLOGCD_CYCLOGCD_H

/* C interface to the cyclogcd library. All handles are opaque; every call
 * that can fail returns a cg_status and records a message on the session. */

#include <stddef.h>
#include <stdint.h>

#if defined(CYCLOGCD_BUILDING_LIBRARY)
#define CG_API __attribute__((visibility("default")))
#else
#define CG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_ERR_INVALID_ARGUMENT = 1,
  CG_ERR_HYPOTHESIS = 2,
  CG_ERR_VERIFICATION = 3,
  CG_ERR_INTERNAL = 4
} cg_status;

typedef enum cg_format { CG_FORMAT_JSON = 0, CG_FORMAT_CSV = 1 } cg_format;

typedef struct cg_session cg_session;
typedef struct cg_report cg_report;

CG_API const char* cg_version(void);
CG_API const char* cg_status_name(cg_status status);

/* threads = 0 selects the hardware concurrency. */
CG_API cg_session* cg_session_create(unsigned threads);
CG_API void cg_session_destroy(cg_session* session);
CG_API void cg_session_set_threads(cg_session* session, unsigned threads);
CG_API unsigned cg_session_threads(const cg_session* session);
/* Message of the most recent failure, or "" after a success. */
CG_API const char* cg_session_last_error(const cg_session* session);

/* Report text, NUL-terminated; size excludes the terminator. */
CG_API const char* cg_report_data(const cg_report* report);
CG_API size_t cg_report_size(const cg_report* report);
CG_API void cg_report_destroy(cg_report* report);

typedef struct cg_gcd_seq_args {
  uint64_t a, b, M, N, n_max;
} cg_gcd_seq_args;

typedef struct cg_champion_args {
  uint64_t a, b, N;
  uint64_t M; /* 0: same as N */
  uint64_t x;
  double delta;
  double curve_c;
} cg_champion_args;

typedef struct cg_density_args {
  uint64_t N, d, a, b, x;
} cg_density_args;

typedef struct cg_delta_args {
  uint64_t limit;
  int squarefree;
} cg_delta_args;

typedef struct cg_lemma_args {
  uint64_t N, a, b, p_max, m_max;
} cg_lemma_args;

typedef struct cg_ff_args {
  uint64_t q, k, n0, m;
  uint64_t v; /* 0: same as m */
  const char* a_poly; /* "c0,c1,..." */
  const char* b_poly;
  unsigned deg_min;
  unsigned deg_max;
  int verify;
  uint64_t n_cap;
} cg_ff_args;

typedef struct cg_monitor_args {
  uint64_t a, b, n_min, n_max;
} cg_monitor_args;

/* On CG_OK, *out receives a report the caller must destroy. */
CG_API cg_status cg_run_gcd_seq(cg_session* s, const cg_gcd_seq_args* args, cg_format fmt, cg_report** out);
CG_API cg_status cg_run_champion(cg_session* s, const cg_champion_args* args, cg_format fmt, cg_report** out);
CG_API cg_status cg_run_density(cg_session* s, const cg_density_args* args, cg_format fmt, cg_report** out);
CG_API cg_status cg_run_delta(cg_session* s, const cg_delta_args* args, cg_format fmt, cg_report** out);
CG_API cg_status cg_run_verify_lemma(cg_session* s, const cg_lemma_args* args, cg_format fmt, cg_report** out);
CG_API cg_status cg_run_ff(cg_session* s, const cg_ff_args* args, cg_format fmt, cg_report** out);
CG_API cg_status cg_run_monitor(cg_session* s, const cg_monitor_args* args, cg_format fmt, cg_report** out);

CG_API cg_status cg_euler_phi(cg_session* s, uint64_t n, uint64_t* out);
CG_API cg_status cg_mult_order(cg_session* s, uint64_t a, uint64_t p, uint64_t* out);
CG_API cg_status cg_is_lth_power_mod(cg_session* s, uint64_t a, uint64_t l, uint64_t p, int* out);
CG_API cg_status cg_delta_count(cg_session* s, uint64_t n, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif
