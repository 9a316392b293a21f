// Parameter-sweep engine: Cartesian product of the varied axes times the
// uniform time grid, each point evaluated through evolve -> density_matrix ->
// all_measures.  Concurrent but order-restoring and fully deterministic.
#pragma once

#include <vector>

#include "fracdimer/config.hpp"

namespace fracdimer {

struct ResourceRecord {
    double t = 0.0;
    double tau = 0.0;
    double nu1 = 0.0;
    double nu2 = 0.0;
    double v12 = 0.0;
    double p = 0.0;
    double norm_sq = 0.0;
    double coherence = 0.0;
    double negativity = 0.0;
    double log_negativity = 0.0;
    double concurrence = 0.0;
    double chsh = 0.0;
};

// Record count = product(axis counts) * steps; ordering is outer axes in
// declaration order with time innermost.  A single failing grid point aborts
// the whole sweep with the offending parameters and time in the message.
// Worker count: min(grid points, hardware threads), capped by the
// FRACDIMER_THREADS environment variable when set.
std::vector<ResourceRecord> run_sweep(const SweepSpec& spec);

}  // namespace fracdimer
