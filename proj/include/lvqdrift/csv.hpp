#pragma once

#include <ostream>
#include <string>

#include "lvqdrift/harness.hpp"
#include "lvqdrift/learning_curve.hpp"

namespace lvqdrift {

// Fixed column order: alpha, eps_plus, eps_minus, eps_ref, eps_track,
// r_pp, r_pm, r_mp, r_mm, q_pp, q_mm, q_pm, then <column>_std for curves
// carrying run statistics. Values are written with "%.17g"-independent
// 10-significant-digit formatting and a decimal point regardless of locale.
void write_curve_csv(std::ostream& os, const LearningCurve& curve);

void write_compare_csv(std::ostream& os, const DeviationReport& report);

// Locale-independent scalar formatting shared by the writers (10
// significant digits).
std::string format_value(double v);

}  // namespace lvqdrift
