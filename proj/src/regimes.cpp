#include "mdqd/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mdqd {

namespace {

struct BranchTerms {
    double eps;    // detuning
    double gap;    // E
    double tanh_e; // tanh(E/T)
};

BranchTerms branch_terms(const DotParams& params, double temperature)
{
    params.validate();
    if (!(params.epsilon > 0.0))
        throw std::domain_error("branch operations require epsilon > 0, got " +
                                std::to_string(params.epsilon));
    if (!std::isfinite(temperature) || temperature <= 0.0)
        throw std::domain_error("temperature must be finite and > 0, got " +
                                std::to_string(temperature));
    const double gap = std::hypot(params.epsilon, params.tau);
    return {params.epsilon, gap, std::tanh(gap / temperature)};
}

void require_strength(double s)
{
    if (!(s >= 0.0 && s <= 1.0))
        throw std::domain_error("strength must lie in [0, 1], got " + std::to_string(s));
}

double clamp01(double x)
{
    return std::clamp(x, 0.0, 1.0);
}

// Raw (unclamped) threshold pairs shared by mode_from_thresholds and
// distance_to_threshold.
struct RawThresholds {
    double lower;
    double upper;
};

RawThresholds raw_refrigerator(const BranchTerms& t, RefrigeratorSign sign)
{
    const double ratio = t.gap / t.eps;
    const double lower = sign == RefrigeratorSign::Plus ? 0.5 * (1.0 - t.tanh_e)
                                                        : 0.5 * (1.0 + t.tanh_e);
    return {lower, 0.5 * (1.0 + ratio * t.tanh_e)};
}

RawThresholds raw_engine(const BranchTerms& t)
{
    const double ratio = t.gap / t.eps;
    return {0.5 * (1.0 - ratio * t.tanh_e), 0.5 * (1.0 + ratio * t.tanh_e)};
}

RefrigeratorSign sign_of(Branch b)
{
    return b == Branch::RefrigeratorPlus ? RefrigeratorSign::Plus : RefrigeratorSign::Minus;
}

} // namespace

std::string_view to_string(Mode m)
{
    switch (m) {
    case Mode::Engine: return "engine";
    case Mode::Refrigerator: return "refrigerator";
    case Mode::Accelerator: return "accelerator";
    case Mode::Heater: return "heater";
    case Mode::Undefined: break;
    }
    return "undefined";
}

std::string_view to_string(Branch b)
{
    switch (b) {
    case Branch::Engine: return "engine";
    case Branch::RefrigeratorPlus: return "refrigerator-plus";
    case Branch::RefrigeratorMinus: break;
    }
    return "refrigerator-minus";
}

Branch parse_branch(std::string_view name)
{
    if (name == "engine")
        return Branch::Engine;
    if (name == "refrigerator-plus")
        return Branch::RefrigeratorPlus;
    if (name == "refrigerator-minus")
        return Branch::RefrigeratorMinus;
    throw std::invalid_argument("unknown branch '" + std::string(name) + "'");
}

Mode classify_from_signs(double Qh, double Qc, double W, double zero_tol)
{
    if (std::abs(Qh) <= zero_tol || std::abs(Qc) <= zero_tol || std::abs(W) <= zero_tol)
        return Mode::Undefined;
    if (!std::isfinite(Qh) || !std::isfinite(Qc) || !std::isfinite(W))
        return Mode::Undefined;

    const bool qh = Qh > 0.0;
    const bool qc = Qc > 0.0;
    const bool w = W > 0.0;
    if (qh && !qc && !w)
        return Mode::Engine;
    if (!qh && qc && w)
        return Mode::Refrigerator;
    if (qh && !qc && w)
        return Mode::Accelerator;
    if (!qh && !qc && w)
        return Mode::Heater;
    return Mode::Undefined;
}

double kappa(double cop)
{
    if (std::isnan(cop) || cop <= 0.0)
        throw std::domain_error("COP must be > 0, got " + std::to_string(cop));
    if (std::isinf(cop))
        return 1.0;
    return cop / (1.0 + cop);
}

HeatWork engine_branch_quantities(const DotParams& params, double temperature, double a)
{
    const BranchTerms t = branch_terms(params, temperature);
    require_strength(a);
    const double thermal = t.gap * t.tanh_e;
    HeatWork hw;
    hw.Qc = -thermal + t.eps * (2.0 * a - 1.0);
    hw.Qh = thermal + t.eps * (2.0 * a - 1.0);
    hw.W = 2.0 * t.eps * (1.0 - 2.0 * a);
    return hw;
}

EngineThresholds engine_branch_thresholds(const DotParams& params, double temperature)
{
    const RawThresholds r = raw_engine(branch_terms(params, temperature));
    return {clamp01(r.lower), 0.5, clamp01(r.upper)};
}

HeatWork refrigerator_plus_quantities(const DotParams& params, double temperature, double b)
{
    const BranchTerms t = branch_terms(params, temperature);
    require_strength(b);
    HeatWork hw;
    hw.Qc = -t.gap * t.tanh_e + t.eps * (2.0 * b - 1.0);
    hw.W = (t.gap + t.eps) * t.tanh_e;
    hw.Qh = t.eps * (1.0 - t.tanh_e - 2.0 * b);
    return hw;
}

HeatWork refrigerator_minus_quantities(const DotParams& params, double temperature, double b)
{
    const BranchTerms t = branch_terms(params, temperature);
    require_strength(b);
    HeatWork hw;
    hw.Qc = -t.gap * t.tanh_e + t.eps * (2.0 * b - 1.0);
    hw.W = (t.gap - t.eps) * t.tanh_e;
    hw.Qh = t.eps * (1.0 + t.tanh_e - 2.0 * b);
    return hw;
}

RefrigeratorThresholds refrigerator_branch_thresholds(const DotParams& params,
                                                      double temperature,
                                                      RefrigeratorSign sign)
{
    const RawThresholds r = raw_refrigerator(branch_terms(params, temperature), sign);
    return {clamp01(r.lower), clamp01(r.upper)};
}

double constrained_a(Branch branch, const DotParams& params, double temperature, double strength)
{
    if (branch == Branch::Engine)
        return strength;
    const BranchTerms t = branch_terms(params, temperature);
    return branch == Branch::RefrigeratorPlus ? 0.5 * (1.0 + t.tanh_e) : 0.5 * (1.0 - t.tanh_e);
}

HeatWork branch_quantities(Branch branch, const DotParams& params, double temperature,
                           double strength)
{
    switch (branch) {
    case Branch::Engine:
        return engine_branch_quantities(params, temperature, strength);
    case Branch::RefrigeratorPlus:
        return refrigerator_plus_quantities(params, temperature, strength);
    case Branch::RefrigeratorMinus:
        break;
    }
    return refrigerator_minus_quantities(params, temperature, strength);
}

std::optional<double> performance(Mode mode, const HeatWork& hw, double zero_tol)
{
    switch (mode) {
    case Mode::Engine:
        if (std::abs(hw.Qh) <= zero_tol)
            return std::nullopt;
        return std::abs(hw.W / hw.Qh);
    case Mode::Refrigerator:
        if (std::abs(hw.W) <= zero_tol)
            return std::nullopt;
        return kappa(std::abs(hw.Qc / hw.W));
    case Mode::Accelerator:
    case Mode::Heater:
        if (std::abs(hw.W) <= zero_tol)
            return std::nullopt;
        return kappa(std::abs(hw.Qh / hw.W));
    case Mode::Undefined:
        break;
    }
    return std::nullopt;
}

Classification classify(Branch branch, const DotParams& params, double temperature,
                        double strength, double zero_tol)
{
    Classification c;
    c.heat = branch_quantities(branch, params, temperature, strength);
    c.mode = classify_from_signs(c.heat.Qh, c.heat.Qc, c.heat.W, zero_tol);
    c.performance = performance(c.mode, c.heat, zero_tol);

    if (c.mode == Mode::Refrigerator)
        c.raw_cop = std::abs(c.heat.Qc / c.heat.W);
    else if (c.mode == Mode::Accelerator || c.mode == Mode::Heater)
        c.raw_cop = std::abs(c.heat.Qh / c.heat.W);

    if (c.mode == Mode::Undefined) {
        if (branch == Branch::RefrigeratorMinus && params.tau == 0.0)
            c.note = "W=0 at zero tunneling";
        else if (std::abs(c.heat.Qh) <= zero_tol || std::abs(c.heat.Qc) <= zero_tol ||
                 std::abs(c.heat.W) <= zero_tol)
            c.note = "on a regime boundary (a quantity is within zero_tol of 0)";
        else
            c.note = "sign pattern has no consistent thermodynamic mode";
    }
    return c;
}

Mode mode_from_thresholds(Branch branch, const DotParams& params, double temperature,
                          double strength)
{
    const BranchTerms t = branch_terms(params, temperature);
    require_strength(strength);

    if (branch == Branch::Engine) {
        const RawThresholds r = raw_engine(t);
        if (strength < r.lower)
            return Mode::Heater;
        if (strength > r.lower && strength < 0.5)
            return Mode::Accelerator;
        if (strength > 0.5 && strength < r.upper)
            return Mode::Engine;
        return Mode::Undefined;
    }

    if (branch == Branch::RefrigeratorMinus && params.tau == 0.0)
        return Mode::Undefined;

    const RawThresholds r = raw_refrigerator(t, sign_of(branch));
    if (strength < r.lower)
        return Mode::Accelerator;
    if (strength > r.lower && strength < r.upper)
        return Mode::Heater;
    if (strength > r.upper)
        return Mode::Refrigerator;
    return Mode::Undefined;
}

double distance_to_threshold(Branch branch, const DotParams& params, double temperature,
                             double strength)
{
    const BranchTerms t = branch_terms(params, temperature);
    if (branch == Branch::Engine) {
        const RawThresholds r = raw_engine(t);
        return std::min({std::abs(strength - r.lower), std::abs(strength - 0.5),
                         std::abs(strength - r.upper)});
    }
    if (branch == Branch::RefrigeratorMinus && params.tau == 0.0)
        return std::numeric_limits<double>::infinity();
    const RawThresholds r = raw_refrigerator(t, sign_of(branch));
    return std::min(std::abs(strength - r.lower), std::abs(strength - r.upper));
}

} // namespace mdqd
