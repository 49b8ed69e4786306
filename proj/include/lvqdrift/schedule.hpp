#pragma once

#include <string>
#include <vector>

namespace lvqdrift {

// Time-dependent class weight p_plus(alpha); p_minus = 1 - p_plus.
//
// Variants:
//   constant:  p_plus(a) = p
//   linear:    1/2 for a < alpha_o, then linear ramp reaching p_max at
//              alpha_end, clamped at p_max afterwards
//   sudden:    p_max for a < alpha_o, 1 - p_max for a >= alpha_o
//   periodic:  1/2 + (p_max - 1/2) cos(2 pi a / period)
class PriorSchedule {
  public:
    enum class Kind { Constant, Linear, Sudden, Periodic };

    static PriorSchedule constant(double p_plus);
    static PriorSchedule linear(double alpha_o, double alpha_end, double p_max);
    static PriorSchedule sudden(double alpha_o, double p_max);
    static PriorSchedule periodic(double period, double p_max);

    // p_plus(alpha); requires alpha >= 0.
    double eval(double alpha) const;

    // Points where the schedule is discontinuous or non-smooth; the ODE
    // integrator aligns its grid with these.
    std::vector<double> breakpoints() const;

    Kind kind() const { return kind_; }
    double alpha_o() const { return alpha_o_; }
    double alpha_end() const { return alpha_end_; }
    double p_max() const { return p_max_; }
    double p_plus_const() const { return p_plus_; }
    double period() const { return period_; }

    std::string kind_name() const;

  private:
    PriorSchedule() = default;

    Kind kind_ = Kind::Constant;
    double p_plus_ = 0.5;    // constant
    double alpha_o_ = 0.0;   // linear, sudden
    double alpha_end_ = 0.0; // linear
    double p_max_ = 0.5;     // linear, sudden, periodic
    double period_ = 0.0;    // periodic
};

}  // namespace lvqdrift
