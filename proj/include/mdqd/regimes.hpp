// regimes.hpp: Operational-mode classification on the constrained branches
//
// Sign conventions (Qh, Qc, W):
//
//     Engine        +  -  -    eta = |W / Qh|
//     Refrigerator  -  +  +    COP = |Qc / W|
//     Accelerator   +  -  +    COP = |Qh / W|
//     Heater        -  -  +    COP = |Qh / W|
//
// Any other pattern, or any quantity within zero_tol of zero, is Undefined.
// COP modes report kappa = COP / (1 + COP).
//
// Branches and the stroke each quantity is read from:
//
//     Engine             b = a                Qc = dU1, Qh = dU2, W = dU3
//     RefrigeratorPlus   a = (1 + tanh)/2     Qc = dU1, W = dU2, Qh = dU3
//     RefrigeratorMinus  a = (1 - tanh)/2     Qc = dU1, W = dU2, Qh = dU3
//
// where tanh = tanh(E/T). All branch operations require epsilon > 0.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mdqd/qdot_core.hpp"

namespace mdqd {

inline constexpr double kDefaultZeroTol = 1e-12;

enum class Mode { Engine, Refrigerator, Accelerator, Heater, Undefined };
inline constexpr int kModeCount = 5;

enum class Branch { Engine, RefrigeratorPlus, RefrigeratorMinus };

enum class RefrigeratorSign { Plus, Minus };

std::string_view to_string(Mode m);
std::string_view to_string(Branch b);
// Accepts "engine", "refrigerator-plus", "refrigerator-minus".
Branch parse_branch(std::string_view name);

struct HeatWork {
    double Qh{0.0};
    double Qc{0.0};
    double W{0.0};
};

struct EngineThresholds {
    double a_heater_max{0.0};
    double a_engine_min{0.5};
    double a_engine_max{0.0};
};

struct RefrigeratorThresholds {
    double b_accel_max{0.0};
    double b_refrig_min{0.0};
};

struct Classification {
    Mode mode{Mode::Undefined};
    HeatWork heat;
    std::optional<double> performance; // eta for Engine, kappa otherwise
    std::optional<double> raw_cop;     // COP modes only; +inf when W -> 0
    std::string note;                  // reason for Undefined, if any
};

Mode classify_from_signs(double Qh, double Qc, double W, double zero_tol = kDefaultZeroTol);

// COP / (1 + COP); +inf maps to 1. Throws std::domain_error for cop <= 0 or NaN.
double kappa(double cop);

// b = a is applied internally.
HeatWork engine_branch_quantities(const DotParams& params, double temperature, double a);
EngineThresholds engine_branch_thresholds(const DotParams& params, double temperature);

HeatWork refrigerator_plus_quantities(const DotParams& params, double temperature, double b);
HeatWork refrigerator_minus_quantities(const DotParams& params, double temperature, double b);
RefrigeratorThresholds refrigerator_branch_thresholds(const DotParams& params,
                                                      double temperature,
                                                      RefrigeratorSign sign);

// Channel-A strength the branch constraint imposes (the free strength for Engine).
double constrained_a(Branch branch, const DotParams& params, double temperature, double strength);

HeatWork branch_quantities(Branch branch, const DotParams& params, double temperature,
                           double strength);

// eta (Engine) or kappa(COP); nullopt for Undefined or a vanishing denominator.
std::optional<double> performance(Mode mode, const HeatWork& hw,
                                  double zero_tol = kDefaultZeroTol);

Classification classify(Branch branch, const DotParams& params, double temperature,
                        double strength, double zero_tol = kDefaultZeroTol);

// Mode implied by the analytic threshold intervals alone (no sign
// evaluation). Points exactly on a threshold map to Undefined.
Mode mode_from_thresholds(Branch branch, const DotParams& params, double temperature,
                          double strength);

// Distance from `strength` to the nearest analytic threshold of the branch.
double distance_to_threshold(Branch branch, const DotParams& params, double temperature,
                             double strength);

} // namespace mdqd
