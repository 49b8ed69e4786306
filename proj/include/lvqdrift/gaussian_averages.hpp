#pragma once

#include "lvqdrift/model.hpp"
#include "lvqdrift/order_params.hpp"

namespace lvqdrift {

// Index convention for the +/- labels throughout the theory code:
// slot 0 holds +1, slot 1 holds -1.
inline constexpr int kSignLabels[2] = {+1, -1};
inline int sign_index(int s) { return s > 0 ? 0 : 1; }

// Standard normal CDF / PDF.
double normal_cdf(double x);
double normal_pdf(double x);

// The winner indicator of prototype S is Theta(z_S) with
//   z_S = S * (2 (h_+ - h_-) + q_mm - q_pp),
// obtained from d_T = q_TT - 2 h_T + |xi|^2, where the |xi|^2 terms cancel
// in the difference d_{-S} - d_{+S}.
struct ModulationArgument {
    double coef_h_plus = 0.0;
    double coef_h_minus = 0.0;
    double constant = 0.0;

    double value(double h_plus, double h_minus) const {
        return coef_h_plus * h_plus + coef_h_minus * h_minus + constant;
    }
};

ModulationArgument modulation_argument(const OrderParams& op, int proto_label);

// Conditional averages of the LVQ1 modulation function under one cluster:
// f_S = Theta_S * S * sigma with Theta_S the winner indicator of prototype
// S. All quantities are closed-form Gaussian expectations driven by the
// moment structure (means lambda*R, lambda*delta; covariances v*Q, v*R,
// v*delta).
//
// Arrays are indexed with sign_index(): [0] = +1, [1] = -1.
struct ClusterAverages {
    double theta[2];        // < Theta_S >
    double b_theta[2][2];   // [S][tau]  < b_tau Theta_S >
    double h_theta[2][2];   // [S][T]    < h_T Theta_S >
};

struct AverageTerms {
    // Indexed [sigma][...] with sign_index().
    double f[2][2];         // [sigma][S]       < f_S >_sigma
    double bf[2][2][2];     // [sigma][tau][S]  < b_tau f_S >_sigma
    double hf[2][2][2];     // [sigma][T][S]    < h_T f_S >_sigma
    double ff[2][2][2];     // [sigma][S][T]    < f_S f_T >_sigma
    // True when the prototypes coincide (zero-variance winner argument);
    // the tie-break limit (Theta_+ = 1) was used instead of the CDF form.
    bool degenerate = false;
};

// Averages of Theta_S and its companions under cluster sigma_label.
ClusterAverages cluster_averages(const OrderParams& op, const ModelParams& params,
                                 int sigma_label, bool* degenerate = nullptr);

AverageTerms average_terms(const OrderParams& op, const ModelParams& params);

}  // namespace lvqdrift
