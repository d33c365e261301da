#pragma once

#include <functional>
#include <vector>

#include "lienard/types.hpp"

namespace lienard {

using OdeRhs = std::function<std::vector<Cx>(double, const std::vector<Cx>&)>;

// Embedded explicit Runge-Kutta pair of orders 5(4) with proportional step
// control and 4th-order dense output at the requested t_out.
//
// t_out must be strictly monotone in the direction of integration and lie
// inside [t0, t1] (backward spans are allowed); it needs at least 2 points.
// The returned Trajectory stores y[0] at each output time as z and y[1] as
// dz (for 1-dimensional systems dz is rhs(t, y)[0] instead, so the cubic
// interpolant stays usable).
//
// Throws StepLimitExceeded when cfg.max_steps is hit and NonFiniteState as
// soon as any stage or state component stops being finite.
Trajectory integrate_ode(const OdeRhs& rhs, const std::vector<Cx>& y0,
                         double t0, double t1, const StepperConfig& cfg,
                         const std::vector<double>& t_out);

// Right-hand side of the self-excited oscillator in first-order form:
// y = (z, dz), dz' = eps*(1 - |z|^2)*dz - z.
OdeRhs oscillator_rhs(Cx eps);

} // namespace lienard
