#pragma once

#include <string>
#include <vector>

#include "lvqdrift/metrics.hpp"
#include "lvqdrift/order_params.hpp"

namespace lvqdrift {

// One recorded grid point: errors plus the order parameters they were
// computed from.
struct CurveRow {
    double alpha = 0.0;
    double eps_plus = 0.0;
    double eps_minus = 0.0;
    double eps_ref = 0.0;
    double eps_track = 0.0;
    double r_pp = 0.0, r_pm = 0.0, r_mp = 0.0, r_mm = 0.0;
    double q_pp = 0.0, q_mm = 0.0, q_pm = 0.0;

    static constexpr int kNumValueColumns = 11;  // everything but alpha
    double value_column(int i) const;
    double& value_column(int i);
    static const char* value_column_name(int i);

    void set_order_params(const OrderParams& op);
    void set_errors(const ErrorReport& rep);
};

struct LearningCurve {
    std::string source;           // "ode" or "mc-mean"
    std::vector<CurveRow> rows;
    std::vector<CurveRow> stddev; // across-run std per grid point; empty for ode

    bool has_std() const { return !stddev.empty(); }
    std::size_t size() const { return rows.size(); }
};

}  // namespace lvqdrift
