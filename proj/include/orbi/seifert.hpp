#pragma once

#include <stdexcept>
#include <vector>

#include "orbi/orbifold.hpp"

namespace orbi {

// Seifert-style encoding of an oriented S^1-orbibundle: one integer winding
// q_k per cone point plus the winding q0 of a boundary section around a
// regular point (the m_0 = 1 slot). The bundle enters all formulas only
// through these numbers.
struct SeifertData {
    OrbifoldSignature base;
    long long q0 = 0;
    std::vector<long long> windings; // one per cone point, same order as base.cone_orders

    SeifertData() = default;
    SeifertData(OrbifoldSignature b, long long q0_, std::vector<long long> w)
        : base(std::move(b)), q0(q0_), windings(std::move(w)) {
        if (windings.size() != base.cone_orders.size())
            throw std::invalid_argument("one winding per cone point required");
    }
};

// Class of a curve in H_1(M,Q) in multiples of a regular fiber s. The fiber
// over a point of order m is s/m.
struct FiberClass {
    Rational coefficient;
};

inline FiberClass fiber_class(int order) {
    if (order < 1) throw std::invalid_argument("fiber order must be >= 1");
    return FiberClass{Rational(1, order)};
}

// Sign convention: e = q0 + sum_k q_k/m_k. A boundary section satisfies
// sigma|dB' = -e(M) s, and the per-disc windings contribute -q_k/m_k each;
// the two signs cancel here. Pinned by the tests via e(TB) = chi(B).
inline constexpr int kEulerSign = +1;

inline Rational euler_number(const SeifertData& sd) {
    Rational e(sd.q0);
    for (std::size_t k = 0; k < sd.windings.size(); ++k)
        e += Rational(sd.windings[k], sd.base.cone_orders[k]);
    return Rational(kEulerSign) * e;
}

// Tangent orbibundle: winding 1 at every cone point and
// q0 = (2 - 2g) - n, so that e(TB) = chi(B) exactly.
inline SeifertData tangent_seifert(const OrbifoldSignature& sig) {
    const long long n = static_cast<long long>(sig.cone_orders.size());
    std::vector<long long> w(sig.cone_orders.size(), 1);
    return SeifertData(sig, 2 - 2 * static_cast<long long>(sig.genus) - n, std::move(w));
}

inline bool lattice_check(const Rational& e, const OrbifoldSignature& sig) {
    return euler_lattice(sig).contains(e);
}

inline Rational relative_euler(const SeifertData& sd) {
    const Rational chi = euler_characteristic(sd.base);
    if (chi.is_zero())
        throw ZeroEulerCharacteristic("relative Euler number needs chi(B) != 0");
    return euler_number(sd) / chi;
}

} // namespace orbi
