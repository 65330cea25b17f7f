#include "mdqd/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mdqd {

std::string_view to_string(Orientation o)
{
    return o == Orientation::A ? "A" : "B";
}

MeasurementChannel::MeasurementChannel(double strength, Orientation orientation)
    : strength_(strength), orientation_(orientation)
{
    if (!(strength >= 0.0 && strength <= 1.0))
        throw std::domain_error("measurement strength must lie in [0, 1], got " +
                                std::to_string(strength));
}

KrausSet kraus_operators(const MeasurementChannel& channel)
{
    const double p = channel.strength();
    const double keep = std::sqrt(1.0 - p);
    const double flip = std::sqrt(p);

    // A: target |0> with weight 1-p, |1> with weight p. B mirrors it.
    const int first = channel.orientation() == Orientation::A ? 0 : 1;
    const int second = 1 - first;

    KrausSet k;
    k.operators[0] = keep * ket_bra(first, first);
    k.operators[1] = keep * ket_bra(first, second);
    k.operators[2] = flip * ket_bra(second, second);
    k.operators[3] = flip * ket_bra(second, first);
    return k;
}

Mat2 apply_kraus(const KrausSet& kraus, const Mat2& rho)
{
    Mat2 out = Mat2::Zero();
    for (const Mat2& m : kraus.operators)
        out += m * rho * m.adjoint();
    return out;
}

DensityMatrix apply_channel(const MeasurementChannel& channel, const DensityMatrix& rho)
{
    return DensityMatrix(apply_kraus(kraus_operators(channel), rho.matrix()));
}

DensityMatrix post_measurement_state(const MeasurementChannel& channel)
{
    const double p = channel.strength();
    if (channel.orientation() == Orientation::A)
        return DensityMatrix::diagonal(1.0 - p, p);
    return DensityMatrix::diagonal(p, 1.0 - p);
}

double completeness_residual(const KrausSet& kraus)
{
    Mat2 sum = Mat2::Zero();
    for (const Mat2& m : kraus.operators)
        sum += m.adjoint() * m;
    return max_norm(sum - Mat2::Identity());
}

} // namespace mdqd
