#pragma once

#include "dqlin/matrix.hpp"
#include "dqlin/rng.hpp"

namespace dqlin {

/// Random unit dual quaternion: standard part uniform on the unit 3-sphere,
/// dual part w - q_st * sc(q_st^* w) with w four centered normals of scale 0.5,
/// which guarantees |q| = 1 exactly.
DualQuaternion random_unit_dq(Rng& rng);

/// Vector of n independent random unit dual quaternions.
DQVector random_unit_dq_vector(Index n, Rng& rng);

/// Dual quaternion with all eight coefficients standard normal (scaled).
DualQuaternion random_dq(Rng& rng, double scale = 1.0);

}  // namespace dqlin
