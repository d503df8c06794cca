#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <complex>
#include <random>

#include "orbi/complex_hyperbolic.hpp"

namespace orbi {

using Rng = std::mt19937_64;
using Matrix2 = Eigen::Matrix2cd;

inline Complex random_unit_disc(Rng& rng, double rmax = 0.9) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> rad(0.0, 1.0);
    const double r = rmax * std::sqrt(rad(rng));
    return std::polar(r, ang(rng));
}

// su(2,1) = {J Y : Y anti-Hermitian, tr(JY) = 0}; exponentiating gives a
// form-preserving unit-determinant matrix.
inline Matrix3 random_su21(Rng& rng, double scale = 1.0) {
    std::normal_distribution<double> n(0.0, scale);
    Matrix3 h;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h(i, j) = Complex(n(rng), n(rng));
    const Matrix3 y = h - h.adjoint(); // anti-Hermitian
    Matrix3 x = form_matrix() * y;
    x -= (x.trace() / 3.0) * Matrix3::Identity(); // trace of JY is imaginary
    return x.exp();
}

// su(1,1): [[i a, b], [conj b, -i a]].
inline Matrix2 random_su11(Rng& rng, double scale = 1.0) {
    std::normal_distribution<double> n(0.0, scale);
    Matrix2 x;
    const double a = n(rng);
    const Complex b(n(rng), n(rng));
    x << Complex(0, a), b, std::conj(b), Complex(0, -a);
    return x.exp();
}

inline HPoint random_negative_point(Rng& rng, double rmax = 0.9) {
    // (1, z2, z3) with |z2|^2 + |z3|^2 < rmax^2
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    const double r = rmax * std::sqrt(u(rng));
    const double split = u(rng);
    const double r2 = r * std::sqrt(split), r3 = r * std::sqrt(1.0 - split);
    HVector  v(Complex(1.0, 0.0), std::polar(r2, ang(rng)), std::polar(r3, ang(rng)));
    return HPoint{v, SignClass::Negative};
}

inline HTangent random_tangent(Rng& rng, const HPoint& p) {
    std::normal_distribution<double> n(0.0, 1.0);
    HVector w;
    for (int i = 0; i < 3; ++i) w(i) = Complex(n(rng), n(rng));
    return HTangent{p, project_to_tangent(p, w)};
}

} // namespace orbi
