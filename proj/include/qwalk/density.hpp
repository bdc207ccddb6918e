#pragma once

#include <map>

#include "qwalk/walk_state.hpp"

namespace qwalk {

// Local density matrix rho_t(x) = |psi_t(x)><psi_t(x)|. Zero matrix at
// unoccupied sites.
Eigen::MatrixXcd density_at(const WalkState& state, long x);

// P(X_t = x) = sum_j <j|rho_t(x)|j>.
double probability_at(const WalkState& state, long x);

// Full distribution over the occupied window, positions ascending.
std::map<long, double> probability_distribution(const WalkState& state);

// Sum over all sites of probabilities (should be 1 for normalized states).
double total_probability(const WalkState& state);

// Exact finite sum  sum_x (x/t)^r <j1|rho_t(x)|j2>, accumulated with
// compensated summation. Throws std::invalid_argument for t = 0 with r > 0
// (the rescaling is undefined) and for out-of-range indices.
cplx rescaled_sum(const WalkState& state, int r, int j1, int j2);

// Empirical moment E[(X_t/t)^r] = sum over j of the diagonal rescaled sums.
double empirical_moment(const WalkState& state, int r);

}  // namespace qwalk
