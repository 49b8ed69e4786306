#pragma once

#include <vector>

#include "lvqdrift/gaussian_averages.hpp"
#include "lvqdrift/model.hpp"
#include "lvqdrift/order_params.hpp"
#include "lvqdrift/schedule.hpp"

namespace lvqdrift {

// Time derivative of the order parameters at fixed class weight p_plus:
//   dR_{S tau}/da = eta (<b_tau f_S> - R_{S tau} <f_S>) - gamma R_{S tau}
//   dQ_{S T}/da   = eta (<h_S f_T + h_T f_S> - Q_{S T} <f_S + f_T>)
//                   + eta^2 sum_sigma v_sigma p_sigma <f_S f_T>_sigma
//                   - 2 gamma Q_{S T}
// with <.> = sum_sigma p_sigma <.>_sigma. The returned struct carries the
// derivatives in the R/Q slots and d(alpha)/d(alpha) = 1 in alpha.
OrderParams ode_rhs(const OrderParams& op, const ModelParams& params, double p_plus,
                    double gamma, double eta);

struct IntegrateOptions {
    double d_alpha = 0.01;    // nominal RK4 step
    double gram_tol = 1e-9;   // abort threshold for Gram violations
};

// Fixed-step classical RK4 from init.alpha to alpha_max, evaluating the
// schedule at every stage point. Steps are shortened to land exactly on
// every requested output alpha and on every schedule breakpoint; across a
// discontinuity the left segment is closed with the left-limit prior.
// Returns the states at `output_alphas` (which must be sorted, start at
// init.alpha, and end at alpha_max).
//
// Throws std::runtime_error if the Gram condition is violated beyond
// gram_tol along the trajectory.
std::vector<OrderParams> integrate(const OrderParams& init, const ModelParams& params,
                                   const PriorSchedule& schedule, double gamma, double eta,
                                   const std::vector<double>& output_alphas,
                                   const IntegrateOptions& opts = {});

// Convenience overload: uniform output grid with the given stride.
std::vector<OrderParams> integrate(const OrderParams& init, const ModelParams& params,
                                   const PriorSchedule& schedule, double gamma, double eta,
                                   double alpha_max, double output_stride,
                                   const IntegrateOptions& opts = {});

}  // namespace lvqdrift
