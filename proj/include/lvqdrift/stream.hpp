#pragma once

#include <Eigen/Core>

#include "lvqdrift/model.hpp"
#include "lvqdrift/rng.hpp"

namespace lvqdrift {

struct LabelledExample {
    Eigen::VectorXd xi;
    int sigma = +1;  // class label, +1 or -1
};

// Draws sigma = +1 with probability p_plus, then xi from the isotropic
// Gaussian with mean lambda * b_sigma and per-component variance v_sigma.
LabelledExample sample_example(const ModelParams& params, double p_plus, Rng& rng);

// Allocation-free variant for the training loop.
void sample_example_into(const ModelParams& params, double p_plus, Rng& rng,
                         LabelledExample& out);

}  // namespace lvqdrift
