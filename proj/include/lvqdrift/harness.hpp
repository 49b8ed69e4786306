#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lvqdrift/learning_curve.hpp"
#include "lvqdrift/model.hpp"
#include "lvqdrift/ode.hpp"
#include "lvqdrift/schedule.hpp"

namespace lvqdrift {

enum class EngineChoice { Ode, Mc, Both };

std::string engine_name(EngineChoice e);

struct Scenario {
    ModelParams model = ModelParams::make(100, 1.0, 0.4, 0.4);
    PriorSchedule schedule = PriorSchedule::constant(0.5);
    double eta = 1.0;
    double gamma = 0.0;
    double alpha_max = 200.0;
    EngineChoice engine = EngineChoice::Ode;
    int mc_runs = 50;
    std::uint64_t seed = 0;
    double q_hat = 1e-4;
    double output_stride = 0.5;
    double d_alpha = 0.01;

    // When set, the Monte Carlo curve estimates class errors from fresh test
    // samples (n_test per class per grid point) instead of evaluating the
    // analytic formula on the measured order parameters.
    bool empirical_errors = false;
    std::int64_t n_test = 100000;

    void validate() const;  // throws std::invalid_argument

    // Recording grid: alpha_j = round(j * stride * N) / N so that Monte Carlo
    // measurements land on integer example counts; both engines share it.
    std::vector<double> output_grid() const;
};

struct ScenarioResult {
    std::optional<LearningCurve> ode;
    std::optional<LearningCurve> mc;
};

// Runs the requested engines. The ODE curve integrates the order-parameter
// dynamics from the q_hat initial condition; the MC curve averages mc_runs
// independent trainings (run k seeded by the documented split of `seed`)
// into mean and std per grid point. Runs execute in parallel; the reduction
// is indexed by run, so results are independent of scheduling.
ScenarioResult run_scenario(const Scenario& s);

// Single Monte Carlo trajectory on the scenario grid (exposed for tests and
// deviation studies).
LearningCurve run_mc_single(const Scenario& s, std::uint64_t run_index);

struct ColumnDeviation {
    std::string column;
    double max_abs = 0.0;
    double mean_abs = 0.0;
    double max_z = 0.0;  // |a-b| / (std/sqrt(runs)), 0 when no std available
};

struct DeviationReport {
    std::vector<ColumnDeviation> columns;
    double max_abs_overall = 0.0;

    const ColumnDeviation& column(const std::string& name) const;
};

// Per-column max/mean absolute deviation of b against a on a's grid
// (rows of b are linearly interpolated where grids differ), plus z-scores
// computed from b's std columns when present. Throws if the alpha ranges
// are disjoint.
DeviationReport compare_curves(const LearningCurve& a, const LearningCurve& b,
                               int b_runs = 0);

}  // namespace lvqdrift
