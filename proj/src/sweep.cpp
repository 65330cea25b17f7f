#include "mdqd/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mdqd {

namespace {

void validate_axis(const Axis& axis, const char* name)
{
    if (axis.steps < 2)
        throw std::domain_error(std::string(name) + " axis needs at least 2 steps");
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || !(axis.min < axis.max))
        throw std::domain_error(std::string(name) + " axis needs finite min < max");
}

} // namespace

double Axis::at(std::size_t i) const
{
    if (i + 1 == steps)
        return max;
    const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
    return std::min(min + (max - min) * t, max);
}

void GridSpec::validate() const
{
    validate_axis(strength, "strength");
    validate_axis(epsilon, "epsilon");
    if (strength.min < 0.0 || strength.max > 1.0)
        throw std::domain_error("strength axis must lie within [0, 1]");
    if (!(epsilon.min > 0.0))
        throw std::domain_error("epsilon axis must start above 0");
    if (!std::isfinite(temperature) || temperature <= 0.0)
        throw std::domain_error("temperature must be finite and > 0");
    if (!std::isfinite(tau))
        throw std::domain_error("tau must be finite");
    if (!(zero_tol >= 0.0))
        throw std::domain_error("zero_tol must be >= 0");
}

double ModeSummary::fraction(Mode m) const
{
    return total == 0 ? 0.0 : static_cast<double>(count(m)) / static_cast<double>(total);
}

SweepCell evaluate_cell(const GridSpec& spec, std::size_t i_eps, std::size_t i_str)
{
    SweepCell cell;
    cell.strength = spec.strength.at(i_str);
    cell.epsilon = spec.epsilon.at(i_eps);
    const DotParams params{cell.epsilon, spec.tau};
    const Classification c =
        classify(spec.branch, params, spec.temperature, cell.strength, spec.zero_tol);
    cell.mode = c.mode;
    cell.performance = c.performance;
    cell.Qh = c.heat.Qh;
    cell.Qc = c.heat.Qc;
    cell.W = c.heat.W;
    return cell;
}

ModeSummary summarize(const std::vector<SweepCell>& cells)
{
    ModeSummary s;
    for (const SweepCell& c : cells)
        ++s.counts[static_cast<std::size_t>(c.mode)];
    s.total = cells.size();
    return s;
}

SweepResult run_sweep(const GridSpec& spec)
{
    return run_sweep_parallel(spec);
}

std::map<Mode, double> mode_area_fractions(const SweepResult& result)
{
    std::map<Mode, double> out;
    for (int m = 0; m < kModeCount; ++m) {
        const auto mode = static_cast<Mode>(m);
        if (result.summary.count(mode) > 0)
            out[mode] = result.summary.fraction(mode);
    }
    return out;
}

} // namespace mdqd
