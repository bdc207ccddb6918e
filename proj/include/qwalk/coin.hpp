#pragma once

#include <complex>
#include <Eigen/Dense>

namespace qwalk {

using cplx = std::complex<double>;

enum class CoinKind {
  TwoStateFamilyA,   // u00 = -u11 = cos(theta), u01 = u10 = sin(theta), det = -1
  TwoStateFamilyB,   // u00 =  u11 = cos(theta), -u01 = u10 = sin(theta), det = +1
  GroverThreeState,  // G = (2/3) sum |j1><j2| - I
};

// Coin operator applied to the internal degree of freedom before the shift.
// Two-state coins are parameterized by theta in (0, 2pi) with theta not in
// {pi/2, pi, 3pi/2} (equivalently cos != 0 and sin != 0); the 3-state coin
// is the fixed Grover matrix. The realized matrix is checked to be unitary
// to 1e-14 entrywise at construction.
class CoinSpec {
 public:
  static CoinSpec two_state(CoinKind kind, double theta);
  static CoinSpec grover();

  CoinKind kind() const { return kind_; }
  int dim() const { return kind_ == CoinKind::GroverThreeState ? 3 : 2; }
  double theta() const { return theta_; }
  double c() const { return c_; }
  double s() const { return s_; }
  double det() const { return det_; }
  const Eigen::MatrixXcd& matrix() const { return u_; }

 private:
  CoinSpec(CoinKind kind, double theta, double c, double s, double det,
           Eigen::MatrixXcd u);

  CoinKind kind_;
  double theta_;
  double c_;
  double s_;
  double det_;
  Eigen::MatrixXcd u_;
};

}  // namespace qwalk
