#include "fracdimer/validate.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fracdimer/csvio.hpp"
#include "fracdimer/dimer.hpp"
#include "fracdimer/errors.hpp"
#include "fracdimer/mlfunc.hpp"
#include "fracdimer/qmeasures.hpp"
#include "fracdimer/svg.hpp"
#include "fracdimer/sweep.hpp"
#include "fracdimer/tfse.hpp"

namespace fracdimer {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check(bool cond, const std::string& msg) {
    if (!cond) throw error(msg);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void check_close(double got, double want, double tol, const char* what) {
    if (!(std::abs(got - want) <= tol))
        throw error(std::string(what) + ": got " + fmt(got) + ", want " +
                    fmt(want) + " (tol " + fmt(tol) + ")");
}

void check_rel(double got, double want, double tol, const char* what) {
    check_close(got, want, tol * std::abs(want), what);
}

// Best-effort truncation choice for the public asymptotic entry point.
MLResult best_asymptotic(cplx z, double alpha, double beta) {
    MLResult best = ml_asymptotic(z, alpha, beta, 1);
    for (int n = 2; n <= 30; ++n) {
        MLResult r = ml_asymptotic(z, alpha, beta, n);
        if (r.est_error < best.est_error) best = r;
    }
    return best;
}

CMatrix pure_density(const CVector& psi) {
    CMatrix rho(psi.dim());
    for (int i = 0; i < psi.dim(); ++i)
        for (int j = 0; j < psi.dim(); ++j)
            rho(i, j) = psi[i] * std::conj(psi[j]);
    return rho;
}

CMatrix random_mixed_state(std::mt19937& gen) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix rho(4);
    const double w[2] = {0.7, 0.3};
    for (int s = 0; s < 2; ++s) {
        CVector psi(4);
        for (int i = 0; i < 4; ++i) psi[i] = cplx(gauss(gen), gauss(gen));
        psi.normalize();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                rho(i, j) += w[s] * (psi[i] * std::conj(psi[j]));
    }
    return rho;
}

double binary_entropy(double x) {
    double s = 0.0;
    if (x > 0.0) s -= x * std::log2(x);
    if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
    return s;
}

// ---- individual checks ------------------------------------------------

void check_ml_exp_reduction() {
    const cplx zs[] = {{2.0, 0.0}, {-3.0, 1.0}, {0.5, -4.0},
                       {-8.0, 0.0}, {10.0, 10.0}};
    for (cplx z : zs) {
        const cplx got = ml_eval(z, 1.0).value;
        const cplx want = std::exp(z);
        check(std::abs(got - want) <= 1e-10 * std::abs(want),
              "E_1 vs exp at z=(" + fmt(z.real()) + "," + fmt(z.imag()) +
                  "): diff " + fmt(std::abs(got - want)));
    }
}

void check_ml_special_values() {
    // E_{1/2}(-1) = e * erfc(1).
    const MLResult half = ml_eval(cplx(-1.0, 0.0), 0.5);
    check_close(half.value.real(), 0.4275835761558070044108, 1e-9,
                "E_{1/2}(-1)");
    check(std::abs(half.value.imag()) < 1e-12, "E_{1/2}(-1) must be real");
    // E_{1,2}(1) = e - 1.
    const MLResult e12 = ml_eval(cplx(1.0, 0.0), 1.0, 2.0);
    check_rel(e12.value.real(), 1.71828182845904523536, 1e-12, "E_{1,2}(1)");
    // E_alpha(0) = 1 exactly.
    check(ml_eval(cplx(0.0, 0.0), 0.3).value == cplx(1.0, 0.0),
          "E_{0.3}(0) must be exactly 1");
}

void check_ml_regime_pins() {
    struct Pin {
        double alpha, beta, r, arg;
        cplx want;
    };
    const Pin pins[] = {
        {0.8, 1.0, 2.0, -0.4 * kPi,
         {-0.9578751965344195241169, -0.9242383550464310180428}},
        {0.3, 1.0, 4.0, -0.15 * kPi,
         {1.432855720687741916022, -3.023247222401856436278}},
        {0.75, 1.0, 7.0, 0.7 * kPi,
         {0.0206320691097329209822, 0.03765814611913702052724}},
        {0.5, 0.5, 2.0, kPi, {0.0533982309267447992179, 0.0}},
    };
    for (const Pin& pin : pins) {
        const cplx z = std::polar(pin.r, pin.arg);
        const cplx got = ml_eval(z, pin.alpha, pin.beta).value;
        check(std::abs(got - pin.want) <= 1e-9 * (1.0 + std::abs(pin.want)),
              "E_{" + fmt(pin.alpha) + "," + fmt(pin.beta) + "} at |z|=" +
                  fmt(pin.r) + ": diff " + fmt(std::abs(got - pin.want)));
    }
}

void check_ml_overlap_consistency() {
    const double alphas[] = {0.6, 0.8, 1.0};
    const double radii[] = {9.0, 17.0, 35.0};
    const double args[] = {0.3 * kPi, 0.7 * kPi, kPi};
    for (int a = 0; a < 3; ++a) {
        for (double arg : args) {
            const cplx z = std::polar(radii[a], arg);
            const cplx series = detail::ml_series_extended(z, alphas[a], 1.0).value;
            const cplx asym = best_asymptotic(z, alphas[a], 1.0).value;
            check(std::abs(series - asym) <= 1e-8 * (1.0 + std::abs(series)),
                  "series/asymptotic disagree at alpha=" + fmt(alphas[a]) +
                      ", arg=" + fmt(arg) + ": diff " +
                      fmt(std::abs(series - asym)));
        }
    }
}

void check_tfse_unitary_limit() {
    const DimerParams dp{1.0, 2.0, 1.0, 1.0};
    InitialState st;
    st.kind = StateKind::single_excitation;
    st.p = 0.6;
    const CVector psi0 = st.amplitudes();
    const CMatrix h = build_hamiltonian(dp);
    for (double t : {0.7, 2.3}) {
        const EvolvedState es = evolve(st, dp, FractionalOrder(1.0), t);
        const CVector want = matrix_exp_unitary(h, t) * psi0;
        for (int i = 0; i < 4; ++i)
            check(std::abs(es.amplitudes[i] - want[i]) <= 1e-8,
                  "unitary-limit mismatch at t=" + fmt(t) + ", component " +
                      std::to_string(i));
    }
}

void check_tfse_caputo_oracle() {
    const DimerParams dp{1.0, 2.0, 1.0, 1.0};
    const double tau = 0.5;
    InitialState st;
    st.kind = StateKind::single_excitation;
    st.p = 1.0 / std::sqrt(2.0);
    const CVector y0 = st.amplitudes();
    CMatrix a = build_hamiltonian(dp);
    a *= std::polar(1.0, -kPi * tau / 2.0);
    const std::vector<double> grid = {0.0, 0.5, 1.0, 1.5};
    const std::vector<CVector> oracle =
        caputo_oracle_solve(a, y0, FractionalOrder(tau), grid, 1000);
    for (size_t k = 0; k < grid.size(); ++k) {
        const EvolvedState es = evolve(st, dp, FractionalOrder(tau), grid[k]);
        for (int i = 0; i < 4; ++i)
            check(std::abs(es.amplitudes[i] - oracle[k][i]) <= 1e-4,
                  "Caputo oracle mismatch at t=" + fmt(grid[k]) +
                      ", component " + std::to_string(i));
    }
}

void check_dimer_eigensystem() {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> nu(-5.0, 5.0);
    std::uniform_real_distribution<double> v(0.1, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const DimerParams dp{nu(gen), nu(gen), v(gen), 1.0};
        const DimerEigensystem eig = eigensystem(dp);
        check(!eig.numeric_fallback, "closed form fell back to Jacobi");
        const CMatrix h = build_hamiltonian(dp);
        std::vector<double> analytic(eig.energies.begin(), eig.energies.end());
        std::sort(analytic.begin(), analytic.end());
        const EigenSystem jac = hermitian_eig(h);
        for (int i = 0; i < 4; ++i)
            check_close(analytic[i], jac.eigenvalues[i], 1e-10,
                        "eigenvalue vs Jacobi");
        for (int j = 0; j < 4; ++j) {
            CVector hv = h * eig.states[j];
            double resid = 0.0;
            for (int i = 0; i < 4; ++i)
                resid = std::max(resid, std::abs(hv[i] - eig.energies[j] *
                                                             eig.states[j][i]));
            check(resid <= 1e-10, "eigenvector residual " + fmt(resid));
        }
    }
}

void check_dimer_resonant_bell() {
    const DimerParams dp{1.3, 1.3, 0.8, 1.0};
    const DimerEigensystem eig = eigensystem(dp);
    const double inv = 1.0 / std::sqrt(2.0);
    // |Phi_2> = (|01> - |10>)/sqrt(2), |Phi_3> = (|01> + |10>)/sqrt(2).
    const cplx o2 = inv * (eig.states[1][1] - eig.states[1][2]);
    const cplx o3 = inv * (eig.states[2][1] + eig.states[2][2]);
    check(std::abs(o2) >= 1.0 - 1e-10, "antisymmetric Bell overlap " +
                                           fmt(std::abs(o2)));
    check(std::abs(o3) >= 1.0 - 1e-10, "symmetric Bell overlap " +
                                           fmt(std::abs(o3)));
    check_close(eig.energies[1], -0.8, 1e-12, "resonant energy -V12");
    check_close(eig.energies[2], +0.8, 1e-12, "resonant energy +V12");
}

void check_measures_bell_state() {
    CVector bell(4);
    bell[0] = 1.0 / std::sqrt(2.0);
    bell[3] = 1.0 / std::sqrt(2.0);
    const ResourceValues rv = all_measures(pure_density(bell));
    check_close(rv.coherence, 1.0, 1e-9, "Bell coherence");
    check_close(rv.log_negativity, 1.0, 1e-9, "Bell log-negativity");
    check_close(rv.concurrence, 1.0, 1e-9, "Bell concurrence");
    check_close(rv.chsh, 2.0 * std::sqrt(2.0), 1e-9, "Bell CHSH");
}

void check_measures_pure_family() {
    for (double p : {0.3, 0.6}) {
        CVector psi(4);
        psi[0] = p;
        psi[3] = std::sqrt(1.0 - p * p);
        const ResourceValues rv = all_measures(pure_density(psi));
        const double conc = 2.0 * p * std::sqrt(1.0 - p * p);
        check_close(rv.concurrence, conc, 1e-8, "pure-family concurrence");
        check_close(rv.chsh, 2.0 * std::sqrt(1.0 + conc * conc), 1e-8,
                    "pure-family CHSH");
        check_close(rv.coherence, binary_entropy(p * p), 1e-8,
                    "pure-family coherence");
    }
}

void check_chsh_direct_search() {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 3; ++trial) {
        const CMatrix rho = random_mixed_state(gen);
        const double horodecki = chsh_max(rho);
        const double direct = chsh_brute_force(rho, 500, 123);
        check(direct <= horodecki + 1e-9,
              "direct search exceeded criterion value by " +
                  fmt(direct - horodecki));
        check(horodecki - direct <= 1e-4,
              "direct search fell short by " + fmt(horodecki - direct));
    }
}

GeometryParams perpendicular_geometry(double zeta) {
    GeometryParams g;
    g.gamma1 = 2.0;
    g.gamma2 = 0.5;
    g.mu_hat1 = {1.0, 0.0, 0.0};
    g.mu_hat2 = {1.0, 0.0, 0.0};
    g.r_hat = {0.0, 0.0, 1.0};
    g.zeta = zeta;
    return g;
}

void check_rates_small_zeta_limit() {
    const GeometryParams g = perpendicular_geometry(1e-3);
    const CollectiveRates r = collective_rates_small_zeta(g);
    const double want = std::sqrt(g.gamma1 * g.gamma2);
    check_rel(r.gamma12, want, 1e-4, "gamma12 -> sqrt(gamma1*gamma2)");
}

void check_rates_series_crossover() {
    const GeometryParams g = perpendicular_geometry(0.05);
    const CollectiveRates exact = collective_rates(g);
    const CollectiveRates series = collective_rates_small_zeta(g);
    check_rel(series.gamma12, exact.gamma12, 1e-5, "gamma12 series vs exact");
    check_rel(series.j12, exact.j12, 1e-5, "J12 series vs exact");
}

void check_rates_far_field_decay() {
    const GeometryParams g = perpendicular_geometry(1e4);
    const CollectiveRates r = collective_rates(g);
    const double scale = 1e-3 * std::sqrt(g.gamma1 * g.gamma2);
    check(std::abs(r.gamma12) <= scale, "gamma12 did not decay: " +
                                            fmt(r.gamma12));
    check(std::abs(r.j12) <= scale, "J12 did not decay: " + fmt(r.j12));
}

SweepSpec small_spec() {
    return parse_config(
        "nu1 = 1\nnu2 = 2\nv12 = 1\np = 0.70710678\n"
        "vary.tau = 0.2:1.0:3\nt_max = 2\nsteps = 4\n");
}

void check_sweep_grid_output() {
    const SweepSpec spec = small_spec();
    const std::vector<ResourceRecord> recs = run_sweep(spec);
    check(recs.size() == 12, "expected 12 records, got " +
                                 std::to_string(recs.size()));
    for (int g = 0; g < 3; ++g) {
        const double tau = 0.2 + g * 0.4;
        for (int i = 0; i < 4; ++i) {
            const ResourceRecord& r = recs[g * 4 + i];
            check_close(r.tau, tau, 1e-12, "record tau ordering");
            check_close(r.t, 2.0 * i / 3.0, 1e-12, "record time grid");
        }
    }
    check(to_csv(recs) == to_csv(run_sweep(spec)),
          "repeated sweep not byte-identical");
}

void check_csv_round_trip() {
    const std::vector<ResourceRecord> recs = run_sweep(small_spec());
    const std::vector<ResourceRecord> back = parse_csv(to_csv(recs));
    check(back.size() == recs.size(), "round-trip record count");
    for (size_t i = 0; i < recs.size(); ++i) {
        check_close(back[i].t, recs[i].t, 1e-10, "round-trip t");
        check_close(back[i].coherence, recs[i].coherence, 1e-10,
                    "round-trip coherence");
        check_close(back[i].chsh, recs[i].chsh, 1e-10, "round-trip chsh");
    }
}

void check_svg_determinism() {
    const std::vector<ResourceRecord> recs = run_sweep(small_spec());
    const std::string svg = render_svg(recs, "coherence", std::string("tau"));
    check(svg.find("<svg") != std::string::npos &&
              svg.rfind("</svg>") != std::string::npos,
          "missing svg element");
    check(svg.find("<polyline") != std::string::npos, "missing polyline");
    check(svg.find("tau = ") != std::string::npos, "missing legend");
    check(svg == render_svg(recs, "coherence", std::string("tau")),
          "repeated render not byte-identical");
    const std::vector<ResourceRecord> one(recs.begin(), recs.begin() + 1);
    check(render_svg(one, "coherence", std::nullopt).find("<circle") !=
              std::string::npos,
          "single record must render a point marker");
}

}  // namespace

std::vector<CheckResult> run_validation() {
    struct Named {
        const char* name;
        void (*fn)();
    };
    const Named checks[] = {
        {"ml_exp_reduction", check_ml_exp_reduction},
        {"ml_special_values", check_ml_special_values},
        {"ml_regime_pins", check_ml_regime_pins},
        {"ml_overlap_consistency", check_ml_overlap_consistency},
        {"tfse_unitary_limit", check_tfse_unitary_limit},
        {"tfse_caputo_oracle", check_tfse_caputo_oracle},
        {"dimer_eigensystem", check_dimer_eigensystem},
        {"dimer_resonant_bell", check_dimer_resonant_bell},
        {"measures_bell_state", check_measures_bell_state},
        {"measures_pure_family", check_measures_pure_family},
        {"chsh_direct_search", check_chsh_direct_search},
        {"rates_small_zeta_limit", check_rates_small_zeta_limit},
        {"rates_series_crossover", check_rates_series_crossover},
        {"rates_far_field_decay", check_rates_far_field_decay},
        {"sweep_grid_output", check_sweep_grid_output},
        {"csv_round_trip", check_csv_round_trip},
        {"svg_determinism", check_svg_determinism},
    };
    std::vector<CheckResult> results;
    for (const Named& c : checks) {
        CheckResult res;
        res.name = c.name;
        try {
            c.fn();
            res.passed = true;
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = e.what();
        }
        results.push_back(std::move(res));
    }
    return results;
}

}  // namespace fracdimer
