#pragma once

namespace lvqdrift {

// Macroscopic description of a two-prototype system: projections
// r_{S sigma} = w_S . b_sigma, overlaps q_{ST} = w_S . w_T, and the
// learning time alpha = mu / N.
struct OrderParams {
    double r_pp = 0.0;  // w_+ . b_+
    double r_pm = 0.0;  // w_+ . b_-
    double r_mp = 0.0;  // w_- . b_+
    double r_mm = 0.0;  // w_- . b_-
    double q_pp = 0.0;  // |w_+|^2
    double q_mm = 0.0;  // |w_-|^2
    double q_pm = 0.0;  // w_+ . w_-
    double alpha = 0.0;

    double r(int proto, int cluster) const {
        if (proto > 0) return cluster > 0 ? r_pp : r_pm;
        return cluster > 0 ? r_mp : r_mm;
    }
    double q(int a, int b) const {
        if (a == b) return a > 0 ? q_pp : q_mm;
        return q_pm;
    }

    // |w_+ - w_-|^2 expressed in overlaps.
    double proto_gap_sq() const { return q_pp - 2.0 * q_pm + q_mm; }

    // Positive value = violation of the Gram positive-semidefiniteness
    // condition (q_pm^2 <= q_pp * q_mm, diagonals nonnegative).
    double gram_violation() const {
        double worst = 0.0;
        if (q_pp < 0.0) worst = -q_pp;
        if (q_mm < 0.0 && -q_mm > worst) worst = -q_mm;
        double det = q_pp * q_mm - q_pm * q_pm;
        if (det < 0.0 && -det > worst) worst = -det;
        return worst;
    }

    // Initial condition used by both engines: isotropic random prototypes
    // of squared norm q_hat, no overlap with the cluster directions.
    static OrderParams initial(double q_hat) {
        OrderParams op;
        op.q_pp = q_hat;
        op.q_mm = q_hat;
        return op;
    }
};

}  // namespace lvqdrift
