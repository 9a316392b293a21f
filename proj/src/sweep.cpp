#include "fracdimer/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "fracdimer/errors.hpp"
#include "fracdimer/qmeasures.hpp"
#include "fracdimer/tfse.hpp"

namespace fracdimer {
namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

int worker_count(int total) {
    const unsigned hw = std::thread::hardware_concurrency();
    int cap = hw ? static_cast<int>(hw) : 4;
    if (const char* env = std::getenv("FRACDIMER_THREADS"); env && *env) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1)
            throw validation_error("FRACDIMER_THREADS must be a positive integer");
        cap = v > 256 ? 256 : static_cast<int>(v);
    }
    if (cap > total) cap = total;
    return cap < 1 ? 1 : cap;
}

struct PointParams {
    double nu1, nu2, v12, p, tau, hbar_tau;
    std::string describe() const {
        return "nu1=" + fmt(nu1) + ", nu2=" + fmt(nu2) + ", v12=" + fmt(v12) +
               ", p=" + fmt(p) + ", tau=" + fmt(tau);
    }
};

}  // namespace

std::vector<ResourceRecord> run_sweep(const SweepSpec& spec) {
    spec.validate();

    // Axis sample values, declaration order.
    std::vector<std::vector<double>> axis_values;
    for (const SweepAxis& ax : spec.varied) {
        std::vector<double> vals(ax.count);
        for (int i = 0; i < ax.count; ++i)
            vals[i] = ax.start + i * (ax.stop - ax.start) / (ax.count - 1);
        axis_values.push_back(std::move(vals));
    }
    int total = 1;
    for (const auto& vals : axis_values) total *= static_cast<int>(vals.size());

    const int steps = spec.steps;
    std::vector<ResourceRecord> records(
        static_cast<size_t>(total) * static_cast<size_t>(steps));

    auto fixed_of = [&](const char* name, double fallback) {
        auto it = spec.fixed.find(name);
        return it == spec.fixed.end() ? fallback : it->second;
    };

    auto compute_point = [&](int g) {
        // Decode the row-major grid index, outer axis first.
        std::vector<int> idx(axis_values.size(), 0);
        int rem = g;
        for (int k = static_cast<int>(axis_values.size()) - 1; k >= 0; --k) {
            const int c = static_cast<int>(axis_values[k].size());
            idx[k] = rem % c;
            rem /= c;
        }
        PointParams pp{fixed_of("nu1", 0.0),      fixed_of("nu2", 0.0),
                       fixed_of("v12", 0.0),      fixed_of("p", 0.0),
                       fixed_of("tau", 1.0),      fixed_of("hbar_tau", 1.0)};
        for (size_t k = 0; k < axis_values.size(); ++k) {
            const double v = axis_values[k][idx[k]];
            const std::string& name = spec.varied[k].name;
            if (name == "nu1") pp.nu1 = v;
            else if (name == "nu2") pp.nu2 = v;
            else if (name == "v12") pp.v12 = v;
            else if (name == "p") pp.p = v;
            else pp.tau = v;
        }

        const DimerParams dp{pp.nu1, pp.nu2, pp.v12, pp.hbar_tau};
        const FractionalOrder tau(pp.tau);
        InitialState st;
        st.kind = spec.preset;
        st.p = pp.p;

        for (int i = 0; i < steps; ++i) {
            const double t = spec.t_max * i / (steps - 1);
            try {
                const EvolvedState es = evolve(st, dp, tau, t);
                const DensityMatrix dm = density_matrix(es);
                const ResourceValues rv = all_measures(dm.rho);
                ResourceRecord rec{t,
                                   pp.tau,
                                   pp.nu1,
                                   pp.nu2,
                                   pp.v12,
                                   pp.p,
                                   es.norm_sq,
                                   rv.coherence,
                                   rv.negativity,
                                   rv.log_negativity,
                                   rv.concurrence,
                                   rv.chsh};
                const double checks[] = {rec.norm_sq,       rec.coherence,
                                         rec.negativity,    rec.log_negativity,
                                         rec.concurrence,   rec.chsh};
                for (double c : checks)
                    if (!std::isfinite(c)) throw error("non-finite measure value");
                records[static_cast<size_t>(g) * steps + i] = rec;
            } catch (const std::exception& e) {
                throw error("sweep aborted at " + pp.describe() +
                            ", t=" + fmt(t) + ": " + e.what());
            }
        }
    };

    const int threads = worker_count(total);
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::mutex err_mutex;
    std::string first_error;

    auto worker = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            const int g = next.fetch_add(1);
            if (g >= total) break;
            try {
                compute_point(g);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!failed.exchange(true)) first_error = e.what();
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    if (failed) throw error(first_error);
    return records;
}

}  // namespace fracdimer
