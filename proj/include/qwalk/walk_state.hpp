#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

// Thrown when an input state or spinor fails its normalization precondition.
struct NormalizationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Complex amplitudes over a dense window of lattice sites at a fixed time.
// Sites outside the window are exactly zero. Immutable value type: evolution
// produces new states.
class WalkState {
 public:
  // Raw window constructor; no normalization check (k-space reconstruction
  // and linearity tests need unnormalized states).
  WalkState(int dim, long t, long offset, std::vector<cplx> amps);

  // Single-site state at time 0. Requires ||spinor|| = 1 within 1e-12.
  static WalkState initial(int dim, long position, std::span<const cplx> spinor);

  int dim() const { return dim_; }
  long time() const { return t_; }
  long offset() const { return offset_; }
  long sites() const { return static_cast<long>(amps_.size()) / dim_; }
  long x_min() const { return offset_; }
  long x_max() const { return offset_ + sites() - 1; }

  // Amplitude component j at position x; zero outside the window.
  cplx amp(long x, int j) const {
    if (x < offset_ || x > x_max()) return cplx(0.0, 0.0);
    return amps_[static_cast<size_t>(x - offset_) * dim_ + j];
  }

  std::span<const cplx> raw() const { return amps_; }

  // Total norm squared, accumulated with compensated summation.
  double norm2() const;

 private:
  int dim_;
  long t_;
  long offset_;
  std::vector<cplx> amps_;
};

}  // namespace qwalk
