// thermo.hpp: Three-stroke cycle energetics
//
// Stroke 1 thermalizes the dot with the bath (rho3 -> rho1 = Gibbs),
// stroke 2 applies channel A (rho1 -> rho2), stroke 3 applies channel B
// (rho2 -> rho3). Energy and entropy changes close cyclically:
//
//     dU1 = U1 - U3,  dU2 = U2 - U1,  dU3 = U3 - U2   (same for dS)
//
// Two independent routes produce the ledger: the density-matrix pipeline
// (Kraus sums and traces) and the closed forms in E tanh(E/T), epsilon, a, b.

#pragma once

#include "mdqd/qdot_core.hpp"

namespace mdqd {

struct CycleInputs {
    DotParams params;
    double temperature{1.0};
    double a{0.5}; // strength of channel A
    double b{0.5}; // strength of channel B

    // Throws std::domain_error on T <= 0, a or b outside [0, 1], non-finite params.
    void validate() const;
};

struct StrokeLedger {
    double dU1{0.0}, dU2{0.0}, dU3{0.0};
    double dS1{0.0}, dS2{0.0}, dS3{0.0};
    DensityMatrix rho1 = DensityMatrix::maximally_mixed();
    DensityMatrix rho2 = DensityMatrix::maximally_mixed();
    DensityMatrix rho3 = DensityMatrix::maximally_mixed();
};

// -u ln u - (1-u) ln(1-u), 0 ln 0 = 0. Throws std::domain_error outside [0, 1].
double binary_entropy(double u);

StrokeLedger run_cycle_matrix(const CycleInputs& inputs);
StrokeLedger run_cycle_closed_form(const CycleInputs& inputs);

// Largest absolute difference over the six scalars and the three states.
double ledger_discrepancy(const StrokeLedger& x, const StrokeLedger& y);

} // namespace mdqd
