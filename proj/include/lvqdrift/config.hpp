#pragma once

#include <stdexcept>
#include <string>

#include "lvqdrift/harness.hpp"

namespace lvqdrift {

struct ConfigError : std::runtime_error {
    int line;  // 1-based line number; 0 when not tied to a line
    ConfigError(int line_, const std::string& msg)
        : std::runtime_error(msg), line(line_) {}
};

// Parses the key-value scenario format:
//
//   # comment
//   model.lambda = 1.0
//   schedule.kind = linear
//   schedule.alpha_o = 20
//   ...
//
// Recognized keys: model.lambda, model.v_plus, model.v_minus, dim,
// schedule.kind, schedule.p_plus, schedule.alpha_o, schedule.alpha_end,
// schedule.p_max, schedule.period, eta, gamma, alpha_max, engine, mc_runs,
// seed, q_hat, output_stride. Unknown or duplicate keys are rejected;
// missing keys fall back to the defaults documented in the README
// (eta=1, gamma=0, q_hat=1e-4, mc_runs=50, dim=100, output_stride=0.5,
// lambda=1, v=0.4, constant priors 1/2, alpha_max=200, engine=ode).
Scenario parse_config(const std::string& text);

// Inverse of parse_config: emits a document that parses back to the same
// scenario.
std::string serialize_config(const Scenario& s);

}  // namespace lvqdrift
