#include "mdqd/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mdqd/channels.hpp"

namespace mdqd {

namespace {

void require_unit_interval(double x, const char* name)
{
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(x));
}

} // namespace

void CycleInputs::validate() const
{
    params.validate();
    if (!std::isfinite(temperature) || temperature <= 0.0)
        throw std::domain_error("temperature must be finite and > 0, got " +
                                std::to_string(temperature));
    require_unit_interval(a, "a");
    require_unit_interval(b, "b");
}

double binary_entropy(double u)
{
    require_unit_interval(u, "binary entropy argument");
    auto term = [](double p) { return p > 0.0 ? -p * std::log(p) : 0.0; };
    return term(u) + term(1.0 - u);
}

StrokeLedger run_cycle_matrix(const CycleInputs& inputs)
{
    inputs.validate();
    const HermitianMatrix h = hamiltonian(inputs.params);

    StrokeLedger ledger;
    ledger.rho1 = gibbs_state(inputs.params, inputs.temperature);
    ledger.rho2 = apply_channel(MeasurementChannel(inputs.a, Orientation::A), ledger.rho1);
    ledger.rho3 = apply_channel(MeasurementChannel(inputs.b, Orientation::B), ledger.rho2);

    const double u1 = internal_energy(h, ledger.rho1);
    const double u2 = internal_energy(h, ledger.rho2);
    const double u3 = internal_energy(h, ledger.rho3);
    const double s1 = von_neumann_entropy(ledger.rho1);
    const double s2 = von_neumann_entropy(ledger.rho2);
    const double s3 = von_neumann_entropy(ledger.rho3);

    ledger.dU1 = u1 - u3;
    ledger.dU2 = u2 - u1;
    ledger.dU3 = u3 - u2;
    ledger.dS1 = s1 - s3;
    ledger.dS2 = s2 - s1;
    ledger.dS3 = s3 - s2;
    return ledger;
}

StrokeLedger run_cycle_closed_form(const CycleInputs& inputs)
{
    inputs.validate();
    const double eps = inputs.params.epsilon;
    const double a = inputs.a;
    const double b = inputs.b;
    const double gap = std::hypot(eps, inputs.params.tau);
    const double polarization = std::tanh(gap / inputs.temperature);
    const double thermal_energy = gap * polarization;
    // Gibbs population of the excited level: (1 - tanh(E/T)) / 2
    const double h_thermal = binary_entropy(thermal_populations(inputs.params, inputs.temperature).excited);

    StrokeLedger ledger;
    ledger.dU1 = -thermal_energy + eps * (2.0 * b - 1.0);
    ledger.dU2 = thermal_energy + eps * (2.0 * a - 1.0);
    ledger.dU3 = 2.0 * eps * (1.0 - a - b);
    ledger.dS1 = h_thermal - binary_entropy(b);
    ledger.dS2 = binary_entropy(a) - h_thermal;
    ledger.dS3 = binary_entropy(b) - binary_entropy(a);

    ledger.rho1 = gibbs_state(inputs.params, inputs.temperature);
    ledger.rho2 = post_measurement_state(MeasurementChannel(a, Orientation::A));
    ledger.rho3 = post_measurement_state(MeasurementChannel(b, Orientation::B));
    return ledger;
}

double ledger_discrepancy(const StrokeLedger& x, const StrokeLedger& y)
{
    double d = std::max({std::abs(x.dU1 - y.dU1), std::abs(x.dU2 - y.dU2),
                         std::abs(x.dU3 - y.dU3), std::abs(x.dS1 - y.dS1),
                         std::abs(x.dS2 - y.dS2), std::abs(x.dS3 - y.dS3)});
    d = std::max(d, max_norm(x.rho1.matrix() - y.rho1.matrix()));
    d = std::max(d, max_norm(x.rho2.matrix() - y.rho2.matrix()));
    d = std::max(d, max_norm(x.rho3.matrix() - y.rho3.matrix()));
    return d;
}

} // namespace mdqd
