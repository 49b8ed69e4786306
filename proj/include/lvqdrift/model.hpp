#pragma once

#include <Eigen/Core>
#include <utility>

#include "lvqdrift/rng.hpp"

namespace lvqdrift {

// Geometry and noise of the two-cluster input density: isotropic Gaussian
// clusters with means lambda*b_plus / lambda*b_minus and per-component
// variances v_plus / v_minus. The direction vectors are unit norm and
// mutually orthogonal.
struct ModelParams {
    double lambda = 1.0;
    double v_plus = 0.4;
    double v_minus = 0.4;
    int dim = 100;
    Eigen::VectorXd b_plus;
    Eigen::VectorXd b_minus;

    // Throws std::invalid_argument on violated invariants
    // (v > 0, dim >= 2, unit norm and orthogonality within 1e-12).
    void validate() const;

    double variance(int sigma) const { return sigma > 0 ? v_plus : v_minus; }
    const Eigen::VectorXd& center_dir(int sigma) const {
        return sigma > 0 ? b_plus : b_minus;
    }

    // Standard construction: cluster directions e1, e2.
    static ModelParams make(int dim, double lambda, double v_plus, double v_minus);
};

// First two standard basis vectors of R^dim.
std::pair<Eigen::VectorXd, Eigen::VectorXd> make_orthonormal_pair(int dim);

// Random orthonormal pair (Gram-Schmidt on Gaussian draws); used to check
// rotational invariance of the dynamics.
std::pair<Eigen::VectorXd, Eigen::VectorXd> make_random_orthonormal_pair(int dim, Rng& rng);

}  // namespace lvqdrift
