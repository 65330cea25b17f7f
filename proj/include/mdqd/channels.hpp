// channels.hpp: The two nonselective generalized measurement channels
//
// Orientation A with strength a drives any state to (1-a)|0><0| + a|1><1|;
// orientation B with strength b drives any state to b|0><0| + (1-b)|1><1|.
// Both are carried as explicit four-operator Kraus sets and applied as
// rho -> sum_k M_k rho M_k^dagger.

#pragma once

#include <array>
#include <string_view>

#include "mdqd/linalg.hpp"
#include "mdqd/qdot_core.hpp"

namespace mdqd {

enum class Orientation { A, B };

std::string_view to_string(Orientation o);

class MeasurementChannel {
public:
    // Throws std::domain_error unless strength lies in [0, 1].
    MeasurementChannel(double strength, Orientation orientation);

    double strength() const noexcept { return strength_; }
    Orientation orientation() const noexcept { return orientation_; }

private:
    double strength_;
    Orientation orientation_;
};

// Ordered M1..M4. Plain aggregate so tests can build arbitrary sets.
struct KrausSet {
    std::array<Mat2, 4> operators;
};

KrausSet kraus_operators(const MeasurementChannel& channel);

// sum_k M_k rho M_k^dagger without any validation of the result.
Mat2 apply_kraus(const KrausSet& kraus, const Mat2& rho);

DensityMatrix apply_channel(const MeasurementChannel& channel, const DensityMatrix& rho);

// The input-independent output state of the channel (closed form).
DensityMatrix post_measurement_state(const MeasurementChannel& channel);

// max-norm of (sum_k M_k^dagger M_k - I)
double completeness_residual(const KrausSet& kraus);

} // namespace mdqd
