#include "mdqd/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace mdqd {

double max_norm(const Mat2& m)
{
    return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Mat2& m, double tol)
{
    return max_norm(m - m.adjoint()) <= tol;
}

std::array<double, 2> hermitian_eigenvalues(const Mat2& m)
{
    // Closed form: lambda = mean +- sqrt(half_diff^2 + |off|^2). The two
    // diagonal entries enter symmetrically so that diag(p, q) and diag(q, p)
    // produce bit-identical spectra.
    const double d0 = m(0, 0).real();
    const double d1 = m(1, 1).real();
    const Complex off = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    const double mean = 0.5 * (d0 + d1);
    const double half_diff = 0.5 * std::abs(d0 - d1);
    const double radius = std::hypot(half_diff, std::abs(off));
    return {mean - radius, mean + radius};
}

Mat2 outer(const Vec2& v, const Vec2& w)
{
    return v * w.adjoint();
}

Mat2 ket_bra(int i, int j)
{
    Mat2 m = Mat2::Zero();
    m(i, j) = 1.0;
    return m;
}

Mat2 commutator(const Mat2& x, const Mat2& y)
{
    return x * y - y * x;
}

} // namespace mdqd
