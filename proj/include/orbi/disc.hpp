#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>

#include "orbi/complex_hyperbolic.hpp"

namespace orbi {

using Matrix2 = Eigen::Matrix2cd;

// Poincare disc model at curvature -4: lengths are half the classical
// curvature -1 ones, d(0,r) = atanh r. Points embed into the ambient model
// as the negative vectors (1, u, 0), which identifies the disc with the
// complex geodesic polar to e3.
inline constexpr double kBoundaryEps = 1e-12;

inline HVector embed_disc(Complex u) { return HVector(Complex(1.0, 0.0), u, Complex(0.0, 0.0)); }

inline HPoint embed_disc_point(Complex u) {
    if (std::abs(u) >= 1.0 - kBoundaryEps)
        throw NonNegativePoint("disc point too close to the boundary");
    return HPoint{embed_disc(u), SignClass::Negative};
}

inline Complex moebius(const Matrix2& m, Complex z) {
    return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
}

inline double su11_residual(const Matrix2& m) {
    Matrix2 j;
    j << Complex(-1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0);
    const double form_dev = (m.adjoint() * j * m - j).norm();
    return std::max(form_dev, std::abs(m.determinant() - Complex(1.0)));
}

inline bool in_su11(const Matrix2& m, double tol = kDefaultTol) {
    return su11_residual(m) <= tol;
}

// Translation taking 0 to w.
inline Matrix2 disc_translation(Complex w) {
    const double s = 1.0 / std::sqrt(1.0 - std::norm(w));
    Matrix2 m;
    m << Complex(s, 0.0), s * w, s * std::conj(w), Complex(s, 0.0);
    return m;
}

// Rotation by theta about the disc point w.
inline Matrix2 disc_rotation(Complex w, double theta) {
    Matrix2 r = Matrix2::Zero();
    r(0, 0) = std::polar(1.0, theta / 2.0);
    r(1, 1) = std::polar(1.0, -theta / 2.0);
    const Matrix2 t = disc_translation(w);
    return t * r * t.inverse();
}

inline double disc_distance(Complex a, Complex b) {
    const Complex w = moebius(disc_translation(a).inverse(), b);
    return std::atanh(std::min(1.0 - 1e-16, std::abs(w)));
}

inline Complex geodesic_midpoint(Complex a, Complex b) {
    const Matrix2 t = disc_translation(a);
    const Complex w = moebius(t.inverse(), b);
    const double r = std::abs(w);
    if (r < 1e-15) return a;
    const Complex mid = w / r * (r / (1.0 + std::sqrt(1.0 - r * r)));
    return moebius(t, mid);
}

// Embedding of a disc automorphism into the stabilizer of the geodesic
// {(1,u,0)}: with A = [[a,b],[conj b, conj a]], the block [[conj a, conj b],
// [b, a]] acts on homogeneous coordinates (z1, z2) as u -> A u.
inline Matrix3 block_embed(const Matrix2& a) {
    Matrix3 m = Matrix3::Zero();
    m(0, 0) = std::conj(a(0, 0));
    m(0, 1) = std::conj(a(0, 1));
    m(1, 0) = a(0, 1);
    m(1, 1) = a(0, 0);
    m(2, 2) = Complex(1.0, 0.0);
    return m;
}

// Same, with an extra normal-bundle phase: diag(e^{i phi} block, e^{-2 i phi})
// stays in SU(2,1) and acts on the geodesic exactly like block_embed(a).
inline Matrix3 block_embed_phased(const Matrix2& a, double phi) {
    Matrix3 m = block_embed(a);
    const Complex w = std::polar(1.0, phi);
    m(0, 0) *= w;
    m(0, 1) *= w;
    m(1, 0) *= w;
    m(1, 1) *= w;
    m(2, 2) = std::polar(1.0, -2.0 * phi);
    return m;
}

} // namespace orbi
