/* C interface to the fracdimer library.
 *
 * Every function that can fail returns an fd_* status code; on failure a
 * human-readable message is stored per thread and readable through
 * fd_error_message() until the next failing call on the same thread.
 * Objects returned through out-parameters are owned by the caller and must
 * be released with the matching *_free function.
 */
#ifndef FRACDIMER_H
#define FRACDIMER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
#define FD_OK 0
#define FD_ERR_INVALID_ARGUMENT 1 /* bad parameter or value out of domain   */
#define FD_ERR_PARSE 2            /* malformed config or CSV text           */
#define FD_ERR_VALIDATION 3       /* structurally valid but inconsistent    */
#define FD_ERR_NUMERIC 4          /* convergence / stability failure        */
#define FD_ERR_IO 5               /* file could not be read or written      */
#define FD_ERR_UNKNOWN_FIELD 6    /* no such column                         */
#define FD_ERR_INTERNAL 7         /* invariant violation inside the library */

/* Opaque handles. */
typedef struct fd_spec fd_spec;       /* sweep configuration under construction */
typedef struct fd_records fd_records; /* immutable sweep result table           */

/* One sweep sample; mirrors the CSV columns in order. */
typedef struct fd_record {
    double t, tau, nu1, nu2, v12, p;
    double norm_sq, coherence, negativity, log_negativity, concurrence, chsh;
} fd_record;

const char* fd_version(void);
/* Message from the most recent failing call on this thread ("" if none). */
const char* fd_error_message(void);

/* --- sweep specification ------------------------------------------------ */
/* Build order: create, then any mix of apply_config/set, then run.  Keys for
 * fd_spec_set are the config-file keys (nu1, nu2, v12, p, tau, hbar_tau,
 * t_max, steps, preset, vary.<name> with value "start:stop:count"); set()
 * overrides earlier values, converting a varied parameter back to fixed when
 * given a scalar.  Completeness is checked at fd_spec_run. */
fd_spec* fd_spec_create(void);
void fd_spec_free(fd_spec* spec);
int fd_spec_apply_config(fd_spec* spec, const char* text);
int fd_spec_set(fd_spec* spec, const char* key, const char* value);
int fd_spec_run(const fd_spec* spec, fd_records** out);

/* --- sweep results -------------------------------------------------------*/
void fd_records_free(fd_records* records);
size_t fd_records_count(const fd_records* records);
int fd_records_get(const fd_records* records, size_t index, fd_record* out);
int fd_records_write_csv(const fd_records* records, const char* path);
int fd_records_read_csv(const char* path, fd_records** out);
/* group_by may be NULL for a single ungrouped line. */
int fd_records_render_svg(const fd_records* records, const char* y_field,
                          const char* group_by, const char* path);

/* --- built-in self checks ------------------------------------------------*/
/* Runs the named oracle checks; cb (may be NULL) is invoked once per check
 * with passed = 1/0 and a diagnostic detail ("" when passed).  *failures
 * receives the number of failed checks. */
typedef void (*fd_check_callback)(const char* name, int passed,
                                  const char* detail, void* user);
int fd_validate(fd_check_callback cb, void* user, int* failures);

/* --- direct numerics ------------------------------------------------------*/
/* Two-parameter Mittag-Leffler function E_{alpha,beta}(z). */
int fd_ml_eval(double re_z, double im_z, double alpha, double beta,
               double* re_out, double* im_out, double* est_error);

/* Collective decay rate gamma12 and coherent shift J12 for two dipoles with
 * unit orientation vectors mu1/mu2, unit separation direction r_hat, and
 * dimensionless separation zeta = n*k*r12.  The _small_zeta variant is the
 * series form required below zeta = 1e-4 where the exact kernels cancel. */
int fd_collective_rates(double gamma1, double gamma2, const double mu1[3],
                        const double mu2[3], const double r_hat[3],
                        double zeta, double* gamma12, double* j12);
int fd_collective_rates_small_zeta(double gamma1, double gamma2,
                                   const double mu1[3], const double mu2[3],
                                   const double r_hat[3], double zeta,
                                   double* gamma12, double* j12);

/* Single-molecule emission rate n * f^3 * d^2 / (3 pi), natural units. */
int fd_emission_rate(double freq, double dipole_sq, double refr_index,
                     double* rate);

#ifdef __cplusplus
}
#endif

#endif /* FRACDIMER_H */
