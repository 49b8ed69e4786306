#pragma once

#include <cstdint>

#include "lvqdrift/model.hpp"
#include "lvqdrift/order_params.hpp"
#include "lvqdrift/rng.hpp"
#include "lvqdrift/trainer.hpp"

namespace lvqdrift {

struct ErrorReport {
    double eps_plus = 0.0;   // misclassification probability, class +1 data
    double eps_minus = 0.0;  // misclassification probability, class -1 data
    double eps_ref = 0.0;    // (eps_plus + eps_minus) / 2, fixed equal priors
    double eps_track = 0.0;  // p_plus * eps_plus + p_minus * eps_minus
};

// Probability that a fresh input from cluster sigma is claimed by the wrong
// prototype:
//   eps^sigma = Phi( [Q_ss - Q_oo - 2 lambda (R_ss - R_os)]
//                    / (2 sqrt(v_sigma (Q_pp - 2 Q_pm + Q_mm))) )
// with s = sigma, o = -sigma. Coincident prototypes (zero denominator) fall
// back to the tie-break classifier: everything is labelled +1, so the error
// is 0 for sigma=+1 and 1 for sigma=-1; *degenerate is set when provided.
double class_error_analytic(const OrderParams& op, const ModelParams& params,
                            int sigma, bool* degenerate = nullptr);

// Fraction of n_test fresh samples from cluster sigma misclassified by the
// nearest-prototype rule.
double class_error_empirical(const PrototypeState& state, const ModelParams& params,
                             int sigma, std::int64_t n_test, Rng& rng);

// Assembles class-wise errors into the reference (equal-weight) and
// tracking (current-prior-weighted) figures.
ErrorReport report(double eps_plus, double eps_minus, double p_plus_current);

}  // namespace lvqdrift
