#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "lvqdrift/model.hpp"
#include "lvqdrift/order_params.hpp"
#include "lvqdrift/rng.hpp"
#include "lvqdrift/stream.hpp"

namespace lvqdrift {

// Monte Carlo state: two prototypes plus the learning-rate and decay
// constants that govern their updates.
struct PrototypeState {
    Eigen::VectorXd w_plus;
    Eigen::VectorXd w_minus;
    std::int64_t mu = 0;   // examples seen so far
    double eta = 1.0;      // learning rate (update scales with eta/N)
    double gamma = 0.0;    // weight-decay rate (shrink factor 1 - gamma/N)

    int dim() const { return static_cast<int>(w_plus.size()); }
};

// Independent random prototypes rescaled to squared norm q_hat exactly;
// q_hat = 0 gives zero vectors.
PrototypeState init_prototypes(int dim, double q_hat, double eta, double gamma, Rng& rng);

// Nearest-prototype label under squared Euclidean distance; ties go to +1.
int classify(const PrototypeState& state, const Eigen::VectorXd& xi);

// One online step: weight decay on both prototypes first (if gamma > 0),
// then the winner w_J moves by (eta/N) * S*sigma * (xi - w_J), attracted
// when labels agree and repelled otherwise. Increments mu.
void lvq1_step(PrototypeState& state, const LabelledExample& ex);

OrderParams measure_order_params(const PrototypeState& state, const ModelParams& params);

}  // namespace lvqdrift
