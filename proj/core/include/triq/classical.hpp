#pragma once

#include <array>

namespace triq {

// Classical XY spins on the triangle, the cold-atom analogue of the quantum
// model: E = -(J_AB cos(tA - tB) + J_BC cos(tB - tC) + J_CA cos(tC - tA)).
// Couplings are listed bond-wise as (J_AB, J_BC, J_CA); mapping from the
// quantum parameters is (j, j*omega, j*eta). All-equal negative couplings
// give the textbook frustrated 120-degree compromise at energy -1.5 per
// unit |J|.

double classical_xy_energy(const std::array<double, 3>& thetas,
                           const std::array<double, 3>& couplings);

struct ClassicalGround {
  std::array<double, 3> thetas{};  // theta_A fixed to 0 (global rotation gauge)
  double energy = 0.0;
};

// Grid search over (theta_B, theta_C) in [0, 2pi) at the given resolution per
// axis, followed by one refinement pass at 10x density around the incumbent.
// resolution >= 8.
ClassicalGround classical_ground_search(const std::array<double, 3>& couplings,
                                        int resolution = 96);

}  // namespace triq
