#pragma once

#include <cmath>
#include <optional>

#include "orbi/integrate.hpp"
#include "orbi/representation.hpp"
#include "orbi/seifert.hpp"

namespace orbi {

struct LatticeVerdict {
    bool member = false;
    Rational nearest;
    Rational generator;
    double deviation = 0.0;
};

// Membership of tau in (2/3)(Z + 1/m_1 Z + ... + 1/m_n Z) within tol, with
// the nearest lattice element.
inline LatticeVerdict toledo_lattice_check(double tau, const OrbifoldSignature& sig,
                                           double tol = 1e-6) {
    const Rational g = Rational(2, 3) * euler_lattice(sig).generator;
    const Rational nearest = RationalLattice{g}.nearest(tau);
    const double dev = std::abs(tau - nearest.to_double());
    return LatticeVerdict{dev <= tol, nearest, g, dev};
}

struct ToledoOptions {
    IntegrationOptions quad;
    double lattice_tol = 1e-6;
    double audit_tol = 1e-8;
    bool audit = true;       // equivariance audit of the map
    double form_tol = 1e-7;  // hard gate on form preservation
};

struct ToledoResult {
    double tau = 0.0;
    double tau_rel = 0.0;
    double quadrature_rel_tol = 0.0;
    LatticeVerdict lattice;
    IntegrationResult quadrature;
    ValidationReport validation;
};

namespace detail {

inline void check_toledo_inputs(const RepresentationData& rep, const EquivariantMap& map,
                                const ToledoOptions& opts, ValidationReport& report) {
    if (!is_hyperbolic(rep.signature))
        throw NotHyperbolic("Toledo invariant needs chi(B) < 0");
    report = validate_representation(rep, kDefaultTol);
    // Form preservation is a hard precondition. Relator-centrality residuals
    // are carried in the report instead: the triangle probes have an
    // irreducible normal-phase defect that is meant to be visible, not fatal.
    for (const auto& check : report.checks)
        if (check.name.find("SU(") != std::string::npos && check.residual > opts.form_tol)
            throw IncompatibleRepresentation("generator fails form preservation: " +
                                             check.name);
    if (opts.audit) {
        const double res = equivariance_residual(map, rep);
        if (res > opts.audit_tol)
            throw IncompatibleRepresentation("map equivariance audit failed, residual " +
                                             std::to_string(res));
    }
}

inline std::pair<HTangent, HTangent> pulled_back_frame(const EquivariantMap& map, Complex u) {
    const HVector lift = map.lift(u);
    const HPoint p = HPoint::of(lift);
    if (p.sign_class != SignClass::Negative)
        throw Error("lift left the complex hyperbolic ball");
    const auto [fx, fy] = map_derivatives(map, u);
    return {HTangent{p, project_to_tangent(p, fx)}, HTangent{p, project_to_tangent(p, fy)}};
}

} // namespace detail

// tau(rho) = (4/2pi) Int_B f* omega, evaluated on a fundamental polygon with
// the pullback density omega(s,t) of the projected lift derivatives.
inline ToledoResult toledo_invariant(const RepresentationData& rep, const EquivariantMap& map,
                                     const GeodesicPolygon& domain,
                                     const ToledoOptions& opts = {}) {
    ToledoResult result;
    detail::check_toledo_inputs(rep, map, opts, result.validation);

    const FormEvaluator density = [&map](Complex u) {
        const auto [s, t] = detail::pulled_back_frame(map, u);
        return metric(s.base, s, t).omega;
    };
    result.quadrature = integrate(domain, density, opts.quad);
    result.tau = (2.0 / M_PI) * result.quadrature.value;
    result.tau_rel = result.tau / euler_characteristic(rep.signature).to_double();
    result.quadrature_rel_tol = opts.quad.rel_tol;
    result.lattice = toledo_lattice_check(result.tau, rep.signature, opts.lattice_tol);
    return result;
}

struct ChernResult {
    double c1 = 0.0;
    IntegrationResult quadrature;
};

// First Chern number c1 = (1/2pi i) Int tr(R) on the pulled-back frame. The
// trace goes through the curvature operator expanded in a tangent basis --
// an independent route from the Kahler density used for tau.
inline ChernResult chern_number(const RepresentationData& rep, const EquivariantMap& map,
                                const GeodesicPolygon& domain, const ToledoOptions& opts = {}) {
    ValidationReport report;
    detail::check_toledo_inputs(rep, map, opts, report);

    const FormEvaluator density = [&map](Complex u) {
        const auto [s, t] = detail::pulled_back_frame(map, u);
        return std::imag(curvature_trace(s.base, s, t)) / (2.0 * M_PI);
    };
    ChernResult result;
    result.quadrature = integrate(domain, density, opts.quad);
    result.c1 = result.quadrature.value;
    return result;
}

struct RigidityReport {
    double tau_rel = 0.0;
    bool bound_ok = false;         // |tau_rel| <= 1 + tol
    bool maximal = false;          // |tau_rel| >= 1 - tol
    std::optional<bool> stable_geodesic_found; // queried only when maximal
    std::optional<HPoint> stable_polar;
    bool consistent = true;        // maximal => stable geodesic exists
};

// |tau_rel| <= 1 always; maximality is cross-checked against the existence
// of a stable complex geodesic of the target group.
inline RigidityReport rigidity_check(const ToledoResult& result, const RepresentationData& rep,
                                     double tol = 1e-3) {
    RigidityReport report;
    report.tau_rel = result.tau_rel;
    report.bound_ok = std::abs(result.tau_rel) <= 1.0 + tol;
    report.maximal = std::abs(result.tau_rel) >= 1.0 - tol;
    if (report.maximal) {
        std::vector<Isometry> gens;
        gens.reserve(rep.generators.size());
        for (const auto& g : rep.generators) gens.push_back(Isometry{g.target});
        const auto polar = stable_complex_geodesic(gens);
        report.stable_geodesic_found = polar.has_value();
        report.stable_polar = polar;
        report.consistent = polar.has_value();
    }
    return report;
}

// Exact form of the holomorphic-section identity (3/2) tau_R = e_R + 1.
inline bool holomorphic_identity_check(const Rational& tau_rel, const Rational& e_rel) {
    return Rational(3) * tau_rel == Rational(2) * (e_rel + Rational(1));
}

inline bool holomorphic_identity_check(double tau_rel, double e_rel, double tol = 1e-9) {
    return std::abs(1.5 * tau_rel - (e_rel + 1.0)) <= tol;
}

} // namespace orbi
