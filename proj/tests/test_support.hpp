#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "orbi/covering.hpp"
#include "orbi/orbifold.hpp"
#include "orbi/seifert.hpp"

namespace orbi::test {

using Rng = std::mt19937_64;

inline OrbifoldSignature random_signature(Rng& rng, unsigned max_genus = 5,
                                          int max_cones = 6, int max_order = 30) {
    std::uniform_int_distribution<unsigned> genus(0, max_genus);
    std::uniform_int_distribution<int> ncones(0, max_cones);
    std::uniform_int_distribution<int> order(2, max_order);
    std::vector<int> cones;
    const int n = ncones(rng);
    for (int i = 0; i < n; ++i) cones.push_back(order(rng));
    return OrbifoldSignature(genus(rng), std::move(cones));
}

inline SeifertData random_seifert(Rng& rng) {
    const OrbifoldSignature sig = random_signature(rng);
    std::uniform_int_distribution<long long> q(-9, 9);
    std::vector<long long> w;
    for (std::size_t i = 0; i < sig.cone_orders.size(); ++i) w.push_back(q(rng));
    return SeifertData(sig, q(rng), std::move(w));
}

inline std::vector<int> divisors_of(int m) {
    std::vector<int> out;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) out.push_back(d);
    return out;
}

// Random orbit partition at one cone point: stabilizer orders s_i dividing m
// with sum m/s_i = degree.
inline std::vector<int> random_orbit_partition(Rng& rng, int m, int degree) {
    const std::vector<int> divs = divisors_of(m); // candidate sheet counts
    std::vector<int> stabs;
    int remaining = degree;
    while (remaining > 0) {
        std::vector<int> usable;
        for (int d : divs)
            if (d <= remaining) usable.push_back(d);
        std::uniform_int_distribution<std::size_t> pick(0, usable.size() - 1);
        const int sheets = usable[pick(rng)];
        stabs.push_back(m / sheets);
        remaining -= sheets;
    }
    return stabs;
}

// Covering data consistent with the base, found by retrying random orbit
// partitions until the covered genus is a nonnegative integer.
inline CoveringData random_covering(Rng& rng, const OrbifoldSignature& base,
                                    int max_degree = 6, int max_tries = 400) {
    std::uniform_int_distribution<int> deg(1, max_degree);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        CoveringData cov;
        cov.degree = deg(rng);
        for (int m : base.cone_orders)
            cov.stabilizers.push_back(random_orbit_partition(rng, m, cov.degree));
        try {
            covered_signature(base, cov);
            return cov;
        } catch (const NonIntegralGenus&) {
            continue;
        }
    }
    return identity_covering(base); // always consistent
}

} // namespace orbi::test
