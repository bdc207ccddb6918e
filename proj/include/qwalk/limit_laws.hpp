#pragma once

#include <functional>
#include <utility>

#include "qwalk/coin.hpp"

namespace qwalk {

// A limit law on a symmetric interval (-bound, bound): an absolutely
// continuous part plus an optional point mass at the origin.
//
// Every density handled here factors as  shape(y) * (bound^2 - y^2)^(sigma/2)
// with sigma = -1 (inverse-square-root endpoint divergence) or sigma = +1
// (square-root endpoint vanishing) and a shape that stays smooth on the
// closed interval. Moments are integrated after the substitution
// y = bound*sin(phi), which cancels the endpoint factor exactly and leaves
// an analytic integrand.
class LimitLaw {
 public:
  LimitLaw(double bound, double point_mass, int endpoint_exponent,
           std::function<double(double)> shape);

  double support_bound() const { return bound_; }
  double point_mass() const { return point_mass_; }

  // Pointwise density; exactly 0 outside the open support interval.
  double density(double y) const;

  // point_mass * 0^r (0^0 := 1, so the mass contributes only at r = 0) plus
  // the integral of y^r against the density, to absolute tolerance abs_tol.
  // Throws QuadratureError if the quadrature does not converge.
  double moment(int r, double abs_tol = 1e-10) const;

 private:
  double bound_;
  double point_mass_;
  int sigma_;  // -1 or +1
  std::function<double(double)> shape_;
};

// Konno's limit density for the position of the 2-state walk started at the
// origin with spinor (alpha, beta), specialized to the real-entry coin
// families. Support (-|c|, |c|), no point mass.
LimitLaw make_g(const CoinSpec& coin, cplx alpha, cplx beta);

// Limit densities for the real and imaginary parts of the <0|rho|1>
// interference sum of the 2-state walk started at the origin.
std::pair<LimitLaw, LimitLaw> make_f_2state(const CoinSpec& coin, cplx alpha,
                                            cplx beta);

// Closed-form coefficients entering the 3-state Grover limit laws for a walk
// started at the origin with spinor (alpha, beta, gamma).
struct GroverCoefficients {
  cplx alpha, beta, gamma;
  double delta_r01, delta_r02, delta_r12;
  double delta_i01, delta_i02, delta_i12;
  double c0, c1, c2;
  double d0, d1;

  double delta_r(int j1, int j2) const;
  double delta_i(int j1, int j2) const;
};

GroverCoefficients grover_coefficients(cplx alpha, cplx beta, cplx gamma);

// Limit laws (real part, imaginary part) for <j1|rho|j2> of the Grover walk,
// (j1,j2) in {(0,1),(0,2),(1,2)}. Support (-1/sqrt(3), 1/sqrt(3)) with a
// point mass at the origin (the localization contribution).
std::pair<LimitLaw, LimitLaw> make_f_3state(const GroverCoefficients& coeffs,
                                            int j1, int j2);

// Free-function spelling of LimitLaw::moment.
double moment_of_law(const LimitLaw& law, int r, double abs_tol = 1e-10);

}  // namespace qwalk
