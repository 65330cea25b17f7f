// linalg.hpp: 2x2 complex matrix helpers shared by every module

#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace mdqd {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

// Default tolerance for matrix comparisons (max-norm).
inline constexpr double kMatrixTol = 1e-12;

// max_{ij} |m_ij|
double max_norm(const Mat2& m);

bool is_hermitian(const Mat2& m, double tol = kMatrixTol);

// Eigenvalues of a Hermitian 2x2 matrix in ascending order. Only the
// Hermitian part of `m` is used.
std::array<double, 2> hermitian_eigenvalues(const Mat2& m);

// |v><w|
Mat2 outer(const Vec2& v, const Vec2& w);

// |i><j| in the localized basis
Mat2 ket_bra(int i, int j);

Mat2 commutator(const Mat2& x, const Mat2& y);

} // namespace mdqd
