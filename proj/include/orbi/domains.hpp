#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "orbi/disc.hpp"
#include "orbi/orbifold.hpp"

namespace orbi {

// Fundamental polygon in the curvature -4 disc. Side i runs from vertex i to
// vertex i+1 (mod n); side_partner pairs sides, and side_pairings[i], when
// present, is the group element mapping side i onto its partner.
struct GeodesicPolygon {
    std::vector<Complex> vertices;
    std::vector<int> cone_orders; // per vertex, 1 = smooth
    std::vector<int> side_partner;
    std::vector<Matrix2> side_pairings;

    int side_count() const { return static_cast<int>(vertices.size()); }
};

inline void check_side_pairings(const GeodesicPolygon& poly, double tol = 1e-9) {
    const int n = poly.side_count();
    for (int i = 0; i < n; ++i) {
        const int j = poly.side_partner[i];
        const Complex a = poly.vertices[i], b = poly.vertices[(i + 1) % n];
        const Complex c = poly.vertices[j], d = poly.vertices[(j + 1) % n];
        const Complex ga = moebius(poly.side_pairings[i], a);
        const Complex gb = moebius(poly.side_pairings[i], b);
        const bool direct = std::abs(ga - c) < tol && std::abs(gb - d) < tol;
        const bool reversed = std::abs(ga - d) < tol && std::abs(gb - c) < tol;
        if (!direct && !reversed)
            throw Error("side pairing does not map side onto its partner");
    }
}

// Doubled hyperbolic triangle for the (p,q,r) sphere orbifold: quadrilateral
// A, conj(C), B, C with angles pi/p at A, pi/q at B and pi/r at the two C
// vertices (one cone point after gluing). Side lengths come from the
// curvature -1 dual cosine rule, halved for curvature -4; vertices sit at
// disc radius tanh of the halved length. Pairings are the vertex rotations
// x = rot(A, 2pi/p) mapping [A,conj C] to [C,A] and rot(B, -2pi/q) mapping
// [conj C, B] to [B, C].
inline GeodesicPolygon triangle_domain(int p, int q, int r) {
    if (p < 2 || q < 2 || r < 2)
        throw NotHyperbolic("triangle orders must be >= 2");
    const Rational chi = euler_characteristic(OrbifoldSignature(0, {p, q, r}));
    if (chi.sign() >= 0)
        throw NotHyperbolic("1/p + 1/q + 1/r must be < 1");

    const double al = M_PI / p, be = M_PI / q, ga = M_PI / r;
    const double cosh_c = (std::cos(ga) + std::cos(al) * std::cos(be)) /
                          (std::sin(al) * std::sin(be));
    const double cosh_b = (std::cos(be) + std::cos(al) * std::cos(ga)) /
                          (std::sin(al) * std::sin(ga));
    const double rb = std::tanh(std::acosh(cosh_c) / 2.0);
    const double rc = std::tanh(std::acosh(cosh_b) / 2.0);

    const Complex a(0.0, 0.0);
    const Complex bv(rb, 0.0);
    const Complex cv = std::polar(rc, al);

    GeodesicPolygon poly;
    poly.vertices = {a, std::conj(cv), bv, cv};
    poly.cone_orders = {p, r, q, r};
    poly.side_partner = {3, 2, 1, 0};
    const Matrix2 x = disc_rotation(a, 2.0 * M_PI / p);
    const Matrix2 y_inv = disc_rotation(bv, -2.0 * M_PI / q);
    poly.side_pairings = {x, y_inv, y_inv.inverse(), x.inverse()};
    check_side_pairings(poly);
    return poly;
}

// Rotation generators x = rot(A, 2pi/p), y = rot(B, 2pi/q), z = (xy)^{-1}
// (the lift of rot(C, 2pi/r) closing x y z = 1 exactly).
struct TriangleGenerators {
    Matrix2 x, y, z;
    Complex a, b, c;
};

inline TriangleGenerators triangle_generators(int p, int q, int r) {
    const GeodesicPolygon poly = triangle_domain(p, q, r);
    TriangleGenerators g;
    g.a = poly.vertices[0];
    g.b = poly.vertices[2];
    g.c = poly.vertices[3];
    g.x = disc_rotation(g.a, 2.0 * M_PI / p);
    g.y = disc_rotation(g.b, 2.0 * M_PI / q);
    g.z = (g.x * g.y).inverse();
    return g;
}

namespace detail {

inline double octagon_vertex_angle(double rho) {
    std::vector<Complex> v;
    for (int k = 0; k < 8; ++k) v.push_back(std::polar(rho, M_PI * k / 4.0));
    const Matrix2 t_inv = disc_translation(v[0]).inverse();
    const Complex w1 = moebius(t_inv, v[1]);
    const Complex w7 = moebius(t_inv, v[7]);
    return std::abs(std::arg(w1 / w7));
}

} // namespace detail

// Regular geodesic octagon with vertex angles 2pi/8 (one smooth vertex cycle,
// genus-2 surface), opposite sides identified by the hyperbolic translations
// through the side midpoints. The circumradius solves the angle condition by
// bisection; hyperbolic area at curvature -4 is pi.
inline GeodesicPolygon octagon_domain() {
    double lo = 0.05, hi = 1.0 - 1e-9;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (detail::octagon_vertex_angle(mid) > M_PI / 4.0)
            lo = mid;
        else
            hi = mid;
    }
    const double rho = 0.5 * (lo + hi);

    GeodesicPolygon poly;
    for (int k = 0; k < 8; ++k) poly.vertices.push_back(std::polar(rho, M_PI * k / 4.0));
    poly.cone_orders.assign(8, 1);
    poly.side_partner.resize(8);
    poly.side_pairings.resize(8);
    for (int i = 0; i < 8; ++i) poly.side_partner[i] = (i + 4) % 8;
    for (int i = 0; i < 4; ++i) {
        const Complex m = geodesic_midpoint(poly.vertices[i], poly.vertices[(i + 1) % 8]);
        const Matrix2 t = disc_translation(m);
        const Matrix2 g = t * t; // translation taking -m to m along the axis
        poly.side_pairings[i + 4] = g;
        poly.side_pairings[i] = g.inverse();
    }
    check_side_pairings(poly);
    return poly;
}

// Pairing translations g_i (mapping side i+4 onto side i) in the order
// g0, g1, g2, g3; the vertex cycle closes as
// g3^{-1} g2 g1^{-1} g0 g3 g2^{-1} g1 g0^{-1} = 1.
inline std::vector<Matrix2> octagon_generators(const GeodesicPolygon& octagon) {
    return {octagon.side_pairings[4], octagon.side_pairings[5], octagon.side_pairings[6],
            octagon.side_pairings[7]};
}

inline std::vector<int> octagon_relator_word() {
    return {-4, 3, -2, 1, 4, -3, 2, -1};
}

} // namespace orbi
