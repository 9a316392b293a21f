// C ABI wrapper: opaque handles over the C++ core, exceptions mapped to
// status codes with a per-thread message.
#include "fracdimer.h"

#include <string>
#include <vector>

#include "fracdimer/config.hpp"
#include "fracdimer/csvio.hpp"
#include "fracdimer/dimer.hpp"
#include "fracdimer/errors.hpp"
#include "fracdimer/mlfunc.hpp"
#include "fracdimer/svg.hpp"
#include "fracdimer/sweep.hpp"
#include "fracdimer/validate.hpp"

struct fd_spec {
    fracdimer::ConfigBuilder builder;
};

struct fd_records {
    std::vector<fracdimer::ResourceRecord> rows;
};

namespace {

thread_local std::string tls_error;

void set_error(const std::string& msg) { tls_error = msg; }

template <typename F>
int wrap(F&& body) noexcept {
    using namespace fracdimer;
    try {
        body();
        return FD_OK;
    } catch (const parse_error& e) {
        set_error(e.what());
        return FD_ERR_PARSE;
    } catch (const validation_error& e) {
        set_error(e.what());
        return FD_ERR_VALIDATION;
    } catch (const unknown_field_error& e) {
        set_error(e.what());
        return FD_ERR_UNKNOWN_FIELD;
    } catch (const io_error& e) {
        set_error(e.what());
        return FD_ERR_IO;
    } catch (const invalid_argument_error& e) {
        set_error(e.what());
        return FD_ERR_INVALID_ARGUMENT;
    } catch (const out_of_domain_error& e) {
        set_error(e.what());
        return FD_ERR_INVALID_ARGUMENT;
    } catch (const invalid_density_matrix_error& e) {
        set_error(e.what());
        return FD_ERR_INVALID_ARGUMENT;
    } catch (const non_convergent_error& e) {
        set_error(e.what());
        return FD_ERR_NUMERIC;
    } catch (const not_hermitian_error& e) {
        set_error(e.what());
        return FD_ERR_NUMERIC;
    } catch (const zeta_underflow_error& e) {
        set_error(e.what());
        return FD_ERR_NUMERIC;
    } catch (const norm_collapse_error& e) {
        set_error(e.what());
        return FD_ERR_NUMERIC;
    } catch (const step_size_too_coarse_error& e) {
        set_error(e.what());
        return FD_ERR_NUMERIC;
    } catch (const error& e) {
        set_error(e.what());
        return FD_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return FD_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return FD_ERR_INTERNAL;
    }
}

int require(bool cond, const char* msg) {
    if (cond) return FD_OK;
    set_error(msg);
    return FD_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* fd_version(void) { return "fracdimer 1.0.0"; }

const char* fd_error_message(void) { return tls_error.c_str(); }

fd_spec* fd_spec_create(void) { return new (std::nothrow) fd_spec(); }

void fd_spec_free(fd_spec* spec) { delete spec; }

int fd_spec_apply_config(fd_spec* spec, const char* text) {
    if (int rc = require(spec && text, "spec and text must be non-null"))
        return rc;
    return wrap([&] { spec->builder.apply_text(text); });
}

int fd_spec_set(fd_spec* spec, const char* key, const char* value) {
    if (int rc = require(spec && key && value,
                         "spec, key, and value must be non-null"))
        return rc;
    return wrap([&] { spec->builder.set(key, value); });
}

int fd_spec_run(const fd_spec* spec, fd_records** out) {
    if (int rc = require(spec && out, "spec and out must be non-null"))
        return rc;
    *out = nullptr;
    return wrap([&] {
        auto result = new fd_records();
        try {
            result->rows = fracdimer::run_sweep(spec->builder.finish());
        } catch (...) {
            delete result;
            throw;
        }
        *out = result;
    });
}

void fd_records_free(fd_records* records) { delete records; }

size_t fd_records_count(const fd_records* records) {
    return records ? records->rows.size() : 0;
}

int fd_records_get(const fd_records* records, size_t index, fd_record* out) {
    if (int rc = require(records && out, "records and out must be non-null"))
        return rc;
    if (int rc = require(index < records->rows.size(), "index out of range"))
        return rc;
    const fracdimer::ResourceRecord& r = records->rows[index];
    *out = fd_record{r.t,       r.tau,       r.nu1,          r.nu2,
                     r.v12,     r.p,         r.norm_sq,      r.coherence,
                     r.negativity, r.log_negativity, r.concurrence, r.chsh};
    return FD_OK;
}

int fd_records_write_csv(const fd_records* records, const char* path) {
    if (int rc = require(records && path, "records and path must be non-null"))
        return rc;
    return wrap([&] { fracdimer::write_csv(records->rows, path); });
}

int fd_records_read_csv(const char* path, fd_records** out) {
    if (int rc = require(path && out, "path and out must be non-null"))
        return rc;
    *out = nullptr;
    return wrap([&] {
        auto result = new fd_records();
        try {
            result->rows = fracdimer::read_csv(path);
        } catch (...) {
            delete result;
            throw;
        }
        *out = result;
    });
}

int fd_records_render_svg(const fd_records* records, const char* y_field,
                          const char* group_by, const char* path) {
    if (int rc = require(records && y_field && path,
                         "records, y_field, and path must be non-null"))
        return rc;
    return wrap([&] {
        std::optional<std::string> group;
        if (group_by) group = std::string(group_by);
        fracdimer::render_svg(records->rows, y_field, group, path);
    });
}

int fd_validate(fd_check_callback cb, void* user, int* failures) {
    if (int rc = require(failures != nullptr, "failures must be non-null"))
        return rc;
    *failures = 0;
    return wrap([&] {
        for (const fracdimer::CheckResult& r : fracdimer::run_validation()) {
            if (!r.passed) ++*failures;
            if (cb) cb(r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
        }
    });
}

int fd_ml_eval(double re_z, double im_z, double alpha, double beta,
               double* re_out, double* im_out, double* est_error) {
    if (int rc = require(re_out && im_out, "outputs must be non-null"))
        return rc;
    return wrap([&] {
        const fracdimer::MLResult r =
            fracdimer::ml_eval(fracdimer::cplx(re_z, im_z), alpha, beta);
        *re_out = r.value.real();
        *im_out = r.value.imag();
        if (est_error) *est_error = r.est_error;
    });
}

namespace {

int rates_impl(double gamma1, double gamma2, const double mu1[3],
               const double mu2[3], const double r_hat[3], double zeta,
               double* gamma12, double* j12, bool series) {
    if (int rc = require(mu1 && mu2 && r_hat && gamma12 && j12,
                         "vectors and outputs must be non-null"))
        return rc;
    return wrap([&] {
        fracdimer::GeometryParams g;
        g.gamma1 = gamma1;
        g.gamma2 = gamma2;
        g.mu_hat1 = {mu1[0], mu1[1], mu1[2]};
        g.mu_hat2 = {mu2[0], mu2[1], mu2[2]};
        g.r_hat = {r_hat[0], r_hat[1], r_hat[2]};
        g.zeta = zeta;
        const fracdimer::CollectiveRates r =
            series ? fracdimer::collective_rates_small_zeta(g)
                   : fracdimer::collective_rates(g);
        *gamma12 = r.gamma12;
        *j12 = r.j12;
    });
}

}  // namespace

int fd_collective_rates(double gamma1, double gamma2, const double mu1[3],
                        const double mu2[3], const double r_hat[3],
                        double zeta, double* gamma12, double* j12) {
    return rates_impl(gamma1, gamma2, mu1, mu2, r_hat, zeta, gamma12, j12,
                      false);
}

int fd_collective_rates_small_zeta(double gamma1, double gamma2,
                                   const double mu1[3], const double mu2[3],
                                   const double r_hat[3], double zeta,
                                   double* gamma12, double* j12) {
    return rates_impl(gamma1, gamma2, mu1, mu2, r_hat, zeta, gamma12, j12,
                      true);
}

int fd_emission_rate(double freq, double dipole_sq, double refr_index,
                     double* rate) {
    if (int rc = require(rate != nullptr, "rate must be non-null")) return rc;
    return wrap(
        [&] { *rate = fracdimer::emission_rate(freq, dipole_sq, refr_index); });
}

}  // extern "C"
