// qdot_core.hpp: Spectral and thermal description of the double quantum dot
//
// Working substance: a single electron on two dots, localized basis
// {|0>, |1>} with sigma_z|0> = +|0>. The Hamiltonian is
//
//     H = -epsilon sigma_z + tau sigma_x  =  [[-epsilon, tau], [tau, +epsilon]]
//
// with eigenvalues +-E, E = sqrt(epsilon^2 + tau^2). Natural units
// (k_B = hbar = 1) throughout: temperatures and energies are plain numbers.

#pragma once

#include <array>

#include "mdqd/linalg.hpp"

namespace mdqd {

struct DotParams {
    double epsilon{0.0}; // detuning
    double tau{0.0};     // interdot tunneling amplitude

    // Throws std::domain_error unless both fields are finite.
    void validate() const;
};

// Hermitian 2x2 matrix; construction checks hermiticity.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const Mat2& m, double tol = kMatrixTol);

    const Mat2& matrix() const noexcept { return m_; }

private:
    Mat2 m_;
};

// Unit-trace, positive semidefinite, Hermitian 2x2 state. Every instance
// satisfies these invariants to within the tolerance given at construction.
class DensityMatrix {
public:
    explicit DensityMatrix(const Mat2& m, double tol = kMatrixTol);

    // p0 |0><0| + p1 |1><1|
    static DensityMatrix diagonal(double p0, double p1);
    static DensityMatrix maximally_mixed();

    const Mat2& matrix() const noexcept { return m_; }

    // Eigenvalues clamped to [0, 1], ascending.
    std::array<double, 2> eigenvalues() const;

private:
    Mat2 m_;
};

struct Spectrum {
    double gap{0.0};   // E
    double theta{0.0}; // mixing angle, |phi1> = (cos theta, sin theta)
    std::array<double, 2> eigenvalues{}; // (E1, E2) = (+E, -E)
    std::array<Vec2, 2> eigenvectors{};  // |phi1>, |phi2>
    bool degenerate{false};              // epsilon = tau = 0
};

// Gibbs populations on the energy eigenbasis.
struct ThermalPopulations {
    double excited{0.5}; // on |phi1>, energy +E
    double ground{0.5};  // on |phi2>, energy -E
};

HermitianMatrix hamiltonian(const DotParams& params);

// Eigenvectors use the half-angle construction theta = atan2(tau, -epsilon)/2,
// which is regular at tau = 0 where arctan(tau / (E - epsilon)) is 0/0.
Spectrum spectrum(const DotParams& params);

// Z = e^{-E/T} + e^{E/T}; overflows to +inf for E/T beyond ~709.
double partition_function(const DotParams& params, double temperature);

// Throws std::domain_error for T <= 0 or non-finite T.
ThermalPopulations thermal_populations(const DotParams& params, double temperature);

// e^{-H/T}/Z assembled from the spectral projectors. The degenerate point
// epsilon = tau = 0 yields I/2.
DensityMatrix gibbs_state(const DotParams& params, double temperature);

// Tr[H rho]; the imaginary roundoff is discarded.
double internal_energy(const HermitianMatrix& h, const DensityMatrix& rho);

// -sum lambda ln lambda with 0 ln 0 = 0 (natural log, units of k_B).
double von_neumann_entropy(const DensityMatrix& rho);

} // namespace mdqd
