#pragma once

#include <atomic>
#include <cmath>
#include <functional>
#include <thread>
#include <vector>

#include "orbi/disc.hpp"
#include "orbi/domains.hpp"

namespace orbi {

// Density w(u) of a 2-form w(u) dx dy in disc coordinates.
using FormEvaluator = std::function<double(Complex)>;

struct IntegrationOptions {
    double rel_tol = 1e-6;
    int max_depth = 13;
    int min_depth = 2;
    int jobs = 1;
    double abs_floor = 1e-12; // scale guard for near-zero integrals
};

struct IntegrationResult {
    double value = 0.0;
    int levels = 0;
    double last_delta = 0.0;
};

namespace detail {

struct Tri {
    Complex a, b, c;
};

inline double chordal_area(const Tri& t) {
    const Complex u = t.b - t.a, v = t.c - t.a;
    return 0.5 * std::abs(u.real() * v.imag() - u.imag() * v.real());
}

// Midpoint rule with uniform geodesic quadrisection. Both the rule error and
// the chord-vs-geodesic boundary slivers shrink like 4^-depth, so one
// Richardson step on successive levels cancels the leading term.
inline double midpoint_sum(const Tri& t, const FormEvaluator& f, int depth) {
    if (depth == 0) {
        const Complex centroid = (t.a + t.b + t.c) / 3.0;
        return chordal_area(t) * f(centroid);
    }
    const Complex ab = geodesic_midpoint(t.a, t.b);
    const Complex bc = geodesic_midpoint(t.b, t.c);
    const Complex ca = geodesic_midpoint(t.c, t.a);
    return midpoint_sum({t.a, ab, ca}, f, depth - 1) +
           midpoint_sum({ab, t.b, bc}, f, depth - 1) +
           midpoint_sum({ca, bc, t.c}, f, depth - 1) +
           midpoint_sum({ab, bc, ca}, f, depth - 1);
}

// Task granularity is fixed by the level alone, so partial sums and their
// combination order do not depend on the worker count and results stay
// bit-stable for any --jobs value.
inline double level_sum(const std::vector<Tri>& base, const FormEvaluator& f, int level,
                        int jobs) {
    int split = 0;
    while (split < level && base.size() << (2 * (split + 1)) <= 4096) ++split;
    std::vector<Tri> tasks;
    tasks.reserve(base.size() << (2 * split));
    std::function<void(const Tri&, int)> expand = [&](const Tri& t, int d) {
        if (d == 0) {
            tasks.push_back(t);
            return;
        }
        const Complex ab = geodesic_midpoint(t.a, t.b);
        const Complex bc = geodesic_midpoint(t.b, t.c);
        const Complex ca = geodesic_midpoint(t.c, t.a);
        expand({t.a, ab, ca}, d - 1);
        expand({ab, t.b, bc}, d - 1);
        expand({ca, bc, t.c}, d - 1);
        expand({ab, bc, ca}, d - 1);
    };
    for (const auto& t : base) expand(t, split);

    const int remaining = level - split;
    std::vector<double> partial(tasks.size(), 0.0);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            partial[i] = midpoint_sum(tasks[i], f, remaining);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                partial[i] = midpoint_sum(tasks[i], f, remaining);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

} // namespace detail

// Integral of the 2-form over the polygon, by adaptive refinement of the
// fan triangulation until successive Richardson estimates agree to rel_tol.
inline IntegrationResult integrate(const GeodesicPolygon& domain, const FormEvaluator& form,
                                   const IntegrationOptions& opts = {}) {
    const int n = domain.side_count();
    std::vector<detail::Tri> base;
    for (int i = 1; i + 1 < n; ++i)
        base.push_back({domain.vertices[0], domain.vertices[i], domain.vertices[i + 1]});

    double prev_raw = 0.0, prev_extrap = 0.0;
    bool have_prev = false, have_extrap = false;
    for (int level = 0; level <= opts.max_depth; ++level) {
        const double raw = detail::level_sum(base, form, level, opts.jobs);
        if (have_prev) {
            const double extrap = (4.0 * raw - prev_raw) / 3.0;
            if (have_extrap) {
                const double delta = std::abs(extrap - prev_extrap);
                const double scale = std::max(std::abs(extrap), opts.abs_floor);
                if (level >= opts.min_depth && delta <= opts.rel_tol * scale)
                    return IntegrationResult{extrap, level, delta};
            }
            prev_extrap = extrap;
            have_extrap = true;
        }
        prev_raw = raw;
        have_prev = true;
    }
    throw NoConvergence("quadrature did not converge to the requested tolerance",
                        prev_extrap, prev_raw);
}

// (1/m) x integral over the Euclidean disc of the given radius, on a polar
// midpoint grid with the same refinement test.
inline IntegrationResult chart_integral(int order, const FormEvaluator& form, double radius,
                                        const IntegrationOptions& opts = {}) {
    if (order < 1) throw std::invalid_argument("chart order must be >= 1");
    auto grid_sum = [&](int nr) {
        const int nt = 4 * nr;
        const double dr = radius / nr, dt = 2.0 * M_PI / nt;
        double total = 0.0;
        for (int i = 0; i < nr; ++i) {
            const double r0 = i * dr, r1 = r0 + dr;
            const double rm = 0.5 * (r0 + r1);
            const double cell = 0.5 * (r1 * r1 - r0 * r0) * dt;
            for (int j = 0; j < nt; ++j)
                total += cell * form(std::polar(rm, (j + 0.5) * dt));
        }
        return total;
    };
    double prev_raw = 0.0, prev_extrap = 0.0;
    bool have_prev = false, have_extrap = false;
    int nr = 8;
    for (int level = 0; level <= opts.max_depth; ++level, nr *= 2) {
        const double raw = grid_sum(nr);
        if (have_prev) {
            const double extrap = (4.0 * raw - prev_raw) / 3.0;
            if (have_extrap) {
                const double delta = std::abs(extrap - prev_extrap);
                const double scale = std::max(std::abs(extrap), opts.abs_floor);
                if (level >= opts.min_depth && delta <= opts.rel_tol * scale)
                    return IntegrationResult{extrap / order, level, delta};
            }
            prev_extrap = extrap;
            have_extrap = true;
        }
        prev_raw = raw;
        have_prev = true;
    }
    throw NoConvergence("chart integral did not converge", prev_extrap / order,
                        prev_raw / order);
}

// Hyperbolic area density, derived from the ambient metric along the
// embedding u -> (1,u,0) rather than hard-coded, so the disc model and the
// ambient curvature normalization cannot drift apart.
inline double hyperbolic_area_density(Complex u) {
    const HPoint p = embed_disc_point(u);
    const HTangent sx{p, project_to_tangent(p, HVector(0.0, Complex(1.0, 0.0), 0.0))};
    const HTangent sy{p, project_to_tangent(p, HVector(0.0, Complex(0.0, 1.0), 0.0))};
    const double g11 = metric(p, sx, sx).g;
    const double g22 = metric(p, sy, sy).g;
    const double g12 = metric(p, sx, sy).g;
    return std::sqrt(std::max(0.0, g11 * g22 - g12 * g12));
}

// Signed Kahler density of the identity embedding.
inline double kahler_density(Complex u) {
    const HPoint p = embed_disc_point(u);
    const HTangent sx{p, project_to_tangent(p, HVector(0.0, Complex(1.0, 0.0), 0.0))};
    const HTangent sy{p, project_to_tangent(p, HVector(0.0, Complex(0.0, 1.0), 0.0))};
    return metric(p, sx, sy).omega;
}

} // namespace orbi
