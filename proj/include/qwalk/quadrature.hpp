#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

namespace qwalk {

// Raised when a quadrature cannot reach the requested tolerance. Results are
// never silently truncated.
struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod (G7, K15) with interval bisection, absolute
// tolerance target. Throws QuadratureError if the subdivision depth limit is
// reached before the local error estimates drop below the budget.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_depth = 60);

// Uniform-node trapezoid rule over one period [-pi, pi) for smooth
// 2pi-periodic integrands (value is the integral, not the mean). Starts at
// n0 nodes and doubles until two successive refinements differ by less than
// abs_tol; throws QuadratureError if n_max is exceeded.
double integrate_periodic(const std::function<double(double)>& f,
                          double abs_tol, int n0 = 4096, int n_max = 1 << 22);

std::complex<double> integrate_periodic_complex(
    const std::function<std::complex<double>(double)>& f, double abs_tol,
    int n0 = 4096, int n_max = 1 << 22);

}  // namespace qwalk
