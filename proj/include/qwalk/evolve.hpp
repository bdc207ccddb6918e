#pragma once

#include "qwalk/walk_state.hpp"

namespace qwalk {

// One step of the coined walk.
//   2-state: psi'(x) = P psi(x+1) + Q psi(x-1),  P = |0><0|U, Q = |1><1|U
//   3-state: psi'(x) = P0 psi(x+1) + P1 psi(x) + P2 psi(x-1), Pj = |j><j|G
// The window grows by one site per side. Relative norm drift per step must
// stay below 1e-12 or a std::runtime_error is raised.
WalkState step(const WalkState& state, const CoinSpec& coin);

// step applied `steps` times; deterministic and bit-identical across runs.
WalkState evolve(const WalkState& state, const CoinSpec& coin, long steps);

// Inverse of step: undo the shift, then apply the adjoint coin.
WalkState step_adjoint(const WalkState& state, const CoinSpec& coin);
WalkState evolve_adjoint(const WalkState& state, const CoinSpec& coin, long steps);

}  // namespace qwalk
