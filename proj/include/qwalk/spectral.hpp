#pragma once

#include <vector>

#include "qwalk/limit_laws.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

enum class Part { Real, Imag };

// Which flat-band constant to integrate for the 3-state walk.
//   PointMass: the weight of the Dirac mass at the origin in the limit laws
//              (matches the closed-form Delta coefficients).
//   LemmaA1:   the constant appearing in the r = 0 moment relation, which for
//              the (0,2) entry subtracts 1/4 |<v|Psi0>|^2 under the integral.
// The two coincide except for the (0,2) real part.
enum class DeltaVariant { PointMass, LemmaA1 };

struct Eigenpair {
  cplx lambda;
  Eigen::VectorXcd vec;  // unit norm; phase arbitrary
};

// The momentum-space one-step operator U_hat(k) = R(k) U and its band
// structure. For the 2-state families the eigensystem is analytic; for the
// Grover walk the flat band (eigenvalue 1) is analytic and the two
// dispersive bands are solved in the 2x2 orthogonal complement. All
// eigenpairs are residual-checked to 1e-10.
class FourierSymbol {
 public:
  explicit FourierSymbol(const CoinSpec& coin);

  int dim() const { return coin_.dim(); }
  const CoinSpec& coin() const { return coin_; }

  Eigen::MatrixXcd at(double k) const;

  // Complete orthonormal eigensystem at momentum k. Band order: 2-state
  // bands follow the j = 1, 2 convention of the analytic formulas; 3-state
  // band 0 is the flat band, bands 1 and 2 are the dispersive pair.
  std::vector<Eigenpair> eigensystem(double k) const;

  // Group velocity h_j(k) = D lambda_j / lambda_j, D = i d/dk. Analytic for
  // the 2-state families; for the Grover walk evaluated as -<v|S|v> with
  // S = diag(1, 0, -1) (the shift generator), which equals the derivative
  // formula for every band including the flat one (identically 0).
  double velocity(int band, double k) const;

  // Normalized flat-band eigenvector of the Grover symbol.
  static Eigen::VectorXcd grover_flat_vector(double k);

 private:
  CoinSpec coin_;
};

// Finite-support Fourier transform  Psi0_hat(k) = sum_x e^{-ikx} psi0(x).
Eigen::VectorXcd fourier_transform(const WalkState& state, double k);

// Propagate t steps in momentum space and reconstruct position amplitudes by
// the inverse transform on n_nodes uniform k-nodes (0 = choose automatically).
// Exact for band-limited data when n_nodes >= 2(t + width) + 1; a smaller
// explicit override is refused rather than silently aliased.
WalkState k_space_propagate(const WalkState& init, const FourierSymbol& symbol,
                            long t, long n_nodes = 0);

// Flat-band integrals of the 3-state walk over k in [-pi, pi):
//   Real: 1/2 |<v|Psi0>|^2 <v|J+_{j1j2}|v>   (+ LemmaA1 extra term for (0,2))
//   Imag: 1/(2i) |<v|Psi0>|^2 <v|J-_{j1j2}|v>
// with J+ = |j1><j2| + |j2><j1| and J- = |j2><j1| - |j1><j2|.
double delta_integral(const WalkState& init, Part part, int j1, int j2,
                      DeltaVariant variant, double abs_tol = 1e-10);

// Limit moment  M_r = lim E[(X_t/t)^r]  computed spectrally as the integral
// of sum_j h_j(k)^r |<v_j(k)|Psi0_hat(k)>|^2 over dk/2pi.
double limit_moment(const WalkState& init, const FourierSymbol& symbol, int r,
                    double abs_tol = 1e-10);

// Exact limit of sum_x (x/t)^r Re or Im <j1|rho_t(x)|j2> via the band-diagonal
// spectral representation (the cross terms vanish in the limit).
double limit_interference_sum(const WalkState& init, const FourierSymbol& symbol,
                              Part part, int r, int j1, int j2,
                              double abs_tol = 1e-10);

// Decomposition of the k-space expression for sum_x (x/t)^r Re<j1|rho|j2>
// of a 2-state walk into the t-independent band-diagonal integral and the
// oscillatory band-mixing integral carrying (conj(lambda_1) lambda_2)^t.
struct InterferenceSplit {
  double band_diag;  // 1/2 of the band-diagonal integral
  cplx cross;        // 1/2 of the cross-term integral at time t
};

InterferenceSplit interference_split(const WalkState& init,
                                     const FourierSymbol& symbol, long t, int r,
                                     int j1, int j2, double abs_tol = 1e-10);

// |cross| from interference_split: the magnitude whose decay demonstrates the
// Riemann-Lebesgue suppression of the band-mixing contribution.
double cross_term_magnitude(const WalkState& init, const FourierSymbol& symbol,
                            long t, int r, int j1, int j2,
                            double abs_tol = 1e-10);

}  // namespace qwalk
