#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "orbi/rational.hpp"

namespace orbi {

// Combinatorial stand-in for a compact oriented 2-orbifold: the genus of the
// underlying surface plus the orders of the cone points. Cone orders are kept
// sorted ascending so equal signatures compare equal.
struct OrbifoldSignature {
    unsigned genus = 0;
    std::vector<int> cone_orders;

    OrbifoldSignature() = default;
    OrbifoldSignature(unsigned g, std::vector<int> orders)
        : genus(g), cone_orders(std::move(orders)) {
        for (int m : cone_orders)
            if (m < 2) throw std::invalid_argument("cone order must be >= 2");
        std::sort(cone_orders.begin(), cone_orders.end());
    }

    friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;
};

// chi(B) = (2 - 2g) + sum_k (-1 + 1/m_k)
inline Rational euler_characteristic(const OrbifoldSignature& sig) {
    Rational chi(2 - 2 * static_cast<long long>(sig.genus));
    for (int m : sig.cone_orders) chi += Rational(-1) + Rational(1, m);
    return chi;
}

// Subgroup g0*Z of Q. Membership is exact.
struct RationalLattice {
    Rational generator; // > 0

    bool contains(const Rational& x) const { return (x / generator).is_integer(); }

    // Nearest lattice element to a floating-point value (ties round away
    // from zero, as llround does).
    Rational nearest(double x) const {
        const long long k = std::llround(x / generator.to_double());
        return Rational(k) * generator;
    }
};

// The subgroup of Q generated by {1, 1/m_1, ..., 1/m_n}, reduced to a single
// generator: with L = lcm(1, m_1, ..., m_n) the group is
// gcd(L, L/m_1, ..., L/m_n)/L * Z.
inline RationalLattice euler_lattice(const OrbifoldSignature& sig) {
    BigInt L = 1;
    for (int m : sig.cone_orders) L = lcm(L, BigInt(m));
    BigInt g = L; // the contribution of 1 = L/L * (1/L) scaled by L
    for (int m : sig.cone_orders) g = gcd(g, L / m);
    return RationalLattice{Rational(g, L)};
}

inline bool is_hyperbolic(const OrbifoldSignature& sig) {
    return euler_characteristic(sig).sign() < 0;
}

// Classical classification of bad closed oriented 2-orbifolds: the teardrop
// (one cone point on a sphere) and the spindle with unequal orders. Purely
// advisory; the exact invariants above stay total.
inline bool is_good(const OrbifoldSignature& sig) {
    if (sig.genus > 0) return true;
    const auto& c = sig.cone_orders;
    if (c.size() == 1) return false;
    if (c.size() == 2 && c[0] != c[1]) return false;
    return true;
}

} // namespace orbi
