#include "mdqd/qdot_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mdqd {

namespace {

void require_temperature(double temperature)
{
    if (!std::isfinite(temperature) || temperature <= 0.0)
        throw std::domain_error("temperature must be finite and > 0, got " +
                                std::to_string(temperature));
}

double entropy_term(double p)
{
    return p > 0.0 ? -p * std::log(p) : 0.0;
}

} // namespace

void DotParams::validate() const
{
    if (!std::isfinite(epsilon) || !std::isfinite(tau))
        throw std::domain_error("epsilon and tau must be finite");
}

HermitianMatrix::HermitianMatrix(const Mat2& m, double tol) : m_(m)
{
    if (!m.allFinite() || !is_hermitian(m, tol))
        throw std::domain_error("matrix is not Hermitian");
}

DensityMatrix::DensityMatrix(const Mat2& m, double tol) : m_(m)
{
    if (!m.allFinite() || !is_hermitian(m, tol))
        throw std::domain_error("density matrix is not Hermitian");
    if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol)
        throw std::domain_error("density matrix trace differs from 1");
    if (hermitian_eigenvalues(m)[0] < -tol)
        throw std::domain_error("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::diagonal(double p0, double p1)
{
    Mat2 m = Mat2::Zero();
    m(0, 0) = p0;
    m(1, 1) = p1;
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed()
{
    return diagonal(0.5, 0.5);
}

std::array<double, 2> DensityMatrix::eigenvalues() const
{
    auto ev = hermitian_eigenvalues(m_);
    for (double& v : ev)
        v = std::clamp(v, 0.0, 1.0);
    return ev;
}

HermitianMatrix hamiltonian(const DotParams& params)
{
    params.validate();
    Mat2 h;
    h << -params.epsilon, params.tau,
         params.tau, params.epsilon;
    return HermitianMatrix(h);
}

Spectrum spectrum(const DotParams& params)
{
    params.validate();
    Spectrum s;
    s.gap = std::hypot(params.epsilon, params.tau);
    s.eigenvalues = {s.gap, -s.gap};
    s.degenerate = params.epsilon == 0.0 && params.tau == 0.0;
    s.theta = s.degenerate ? 0.0 : 0.5 * std::atan2(params.tau, -params.epsilon);

    const double c = std::cos(s.theta);
    const double sn = std::sin(s.theta);
    s.eigenvectors[0] << c, sn;
    s.eigenvectors[1] << sn, -c;
    return s;
}

double partition_function(const DotParams& params, double temperature)
{
    require_temperature(temperature);
    const double x = spectrum(params).gap / temperature;
    return std::exp(-x) + std::exp(x);
}

ThermalPopulations thermal_populations(const DotParams& params, double temperature)
{
    require_temperature(temperature);
    const double x = spectrum(params).gap / temperature;
    // e^{-x}/Z and e^{x}/Z written to stay finite for large x
    ThermalPopulations p;
    p.excited = 1.0 / (1.0 + std::exp(2.0 * x));
    p.ground = 1.0 / (1.0 + std::exp(-2.0 * x));
    return p;
}

DensityMatrix gibbs_state(const DotParams& params, double temperature)
{
    const Spectrum s = spectrum(params);
    if (s.degenerate) {
        require_temperature(temperature);
        return DensityMatrix::maximally_mixed();
    }
    const ThermalPopulations p = thermal_populations(params, temperature);
    const Mat2 rho = p.excited * outer(s.eigenvectors[0], s.eigenvectors[0]) +
                     p.ground * outer(s.eigenvectors[1], s.eigenvectors[1]);
    return DensityMatrix(rho);
}

double internal_energy(const HermitianMatrix& h, const DensityMatrix& rho)
{
    return (h.matrix() * rho.matrix()).trace().real();
}

double von_neumann_entropy(const DensityMatrix& rho)
{
    const auto ev = rho.eigenvalues();
    return entropy_term(ev[0]) + entropy_term(ev[1]);
}

} // namespace mdqd
