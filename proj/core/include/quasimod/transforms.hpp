#pragma once

#include "quasimod/conorm.hpp"
#include "quasimod/gauge.hpp"
#include "quasimod/scale.hpp"

namespace quasimod {

/// (x, y, t) -> max{w_t(x, y), w_t(y, x)}. Additive regime only.
Gauge symmetrize_max(const Gauge& g);

/// (x, y, t) -> w(x, y, t) (+) w(y, x, t) with the gauge's t-conorm.
Gauge symmetrize_conorm(const Gauge& g);

/// (x, y, t) -> w_t(y, x).
Gauge opposite(const Gauge& g);

/// Grid convolution: out(u) = min over grid pairs t_i + t_j <= u of
/// phi(t_i) (+) psi(t_j); 1 where no pair fits below u.
Profile profile_convolve(const Profile& phi, const Profile& psi, TConorm conorm);

}  // namespace quasimod
