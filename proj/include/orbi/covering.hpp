#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbi/seifert.hpp"

namespace orbi {

// Orbit/stabilizer data of an orbifold covering p: B2 -> B1 of degree d.
// For each cone point of the base (order m_k) it lists the stabilizer orders
// of the lifted points. Orbit counting forces sum_i m_k/s_{k,i} = d; that and
// the Euler-characteristic obstruction below are everything the Euler-number
// formulas consume, so no deck group is stored. Realizability beyond these
// constraints is not checked.
struct CoveringData {
    int degree = 1;
    std::vector<std::vector<int>> stabilizers; // one list per base cone point
};

inline void validate_covering(const OrbifoldSignature& base, const CoveringData& cov) {
    if (cov.degree < 1) throw std::invalid_argument("covering degree must be >= 1");
    if (cov.stabilizers.size() != base.cone_orders.size())
        throw std::invalid_argument("one stabilizer list per base cone point required");
    for (std::size_t k = 0; k < base.cone_orders.size(); ++k) {
        const int m = base.cone_orders[k];
        long long sheets = 0;
        for (int s : cov.stabilizers[k]) {
            if (s < 1 || m % s != 0)
                throw std::invalid_argument("stabilizer order must divide the cone order");
            sheets += m / s;
        }
        if (sheets != cov.degree)
            throw std::invalid_argument("orbit counts at cone point " + std::to_string(k) +
                                        " do not sum to the degree");
    }
}

// Covered signature: cone points are the lifts with nontrivial stabilizer;
// the genus solves chi(B2) = d chi(B1). Partition data that violates this
// Euler-characteristic obstruction is rejected.
inline OrbifoldSignature covered_signature(const OrbifoldSignature& base,
                                           const CoveringData& cov) {
    validate_covering(base, cov);
    std::vector<int> orders;
    Rational correction(0);
    for (const auto& lifts : cov.stabilizers)
        for (int s : lifts)
            if (s > 1) {
                orders.push_back(s);
                correction += Rational(-1) + Rational(1, s);
            }
    // 2 - 2g2 + correction = d chi(B1)
    const Rational twice_genus =
        Rational(2) + correction - Rational(cov.degree) * euler_characteristic(base);
    const Rational g2 = twice_genus / Rational(2);
    if (!g2.is_integer() || g2.sign() < 0)
        throw NonIntegralGenus("covering data has no realizable genus (got " + g2.str() + ")");
    return OrbifoldSignature(static_cast<unsigned>(g2.num().convert_to<long long>()),
                             std::move(orders));
}

// Pullback of Seifert data along the covering. Each lift of cone point k
// keeps the base winding q_k; lifts with trivial stabilizer become regular
// points and fold into q0 together with the d lifts of the base regular
// point. This gives e(pullback) = d * e exactly.
inline SeifertData pullback(const SeifertData& sd, const CoveringData& cov) {
    const OrbifoldSignature cover = covered_signature(sd.base, cov);

    long long q0 = static_cast<long long>(cov.degree) * sd.q0;
    std::vector<std::pair<int, long long>> lifted; // (stabilizer order, winding)
    for (std::size_t k = 0; k < cov.stabilizers.size(); ++k)
        for (int s : cov.stabilizers[k]) {
            if (s > 1)
                lifted.emplace_back(s, sd.windings[k]);
            else
                q0 += sd.windings[k];
        }
    // match the sorted cone order of the covered signature
    std::stable_sort(lifted.begin(), lifted.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<long long> windings;
    windings.reserve(lifted.size());
    for (const auto& [s, q] : lifted) windings.push_back(q);
    return SeifertData(cover, q0, std::move(windings));
}

inline CoveringData identity_covering(const OrbifoldSignature& sig) {
    CoveringData cov;
    cov.degree = 1;
    for (int m : sig.cone_orders) cov.stabilizers.push_back({m});
    return cov;
}

} // namespace orbi
