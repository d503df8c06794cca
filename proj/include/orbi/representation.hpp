#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "orbi/disc.hpp"
#include "orbi/domains.hpp"
#include "orbi/orbifold.hpp"
#include "orbi/random.hpp"

namespace orbi {

// A point of the PU(2,1)-representation data of the orbifold group: paired
// (Fuchsian disc generator, SU(2,1) target) matrices, relator words, and the
// word realizing the rotation at each cone point. Words are lists of signed
// 1-based generator indices, evaluated left to right.
struct GeneratorPair {
    Matrix2 source;
    Matrix3 target;
};

struct RepresentationData {
    OrbifoldSignature signature;
    std::vector<GeneratorPair> generators;
    std::vector<std::vector<int>> relators;
    std::vector<std::vector<int>> cone_assignment; // one word per cone point
};

namespace detail {

template <typename Mat>
inline Mat evaluate_word(const std::vector<int>& word,
                         const std::function<Mat(int)>& gen) {
    Mat acc = Mat::Identity();
    for (int idx : word) {
        if (idx == 0) throw std::invalid_argument("word indices are signed and 1-based");
        const Mat g = gen(std::abs(idx) - 1);
        acc = acc * (idx > 0 ? g : Mat(g.inverse()));
    }
    return acc;
}

} // namespace detail

inline Matrix2 evaluate_source_word(const RepresentationData& rep, const std::vector<int>& w) {
    return detail::evaluate_word<Matrix2>(
        w, [&](int i) { return rep.generators.at(i).source; });
}

inline Matrix3 evaluate_target_word(const RepresentationData& rep, const std::vector<int>& w) {
    return detail::evaluate_word<Matrix3>(
        w, [&](int i) { return rep.generators.at(i).target; });
}

struct ValidationCheck {
    std::string name;
    double residual = 0.0;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    double max_residual = 0.0;
    double tol = kDefaultTol;
    bool valid = false;
};

inline double plus_minus_identity_residual(const Matrix2& m) {
    return std::min((m - Matrix2::Identity()).norm(), (m + Matrix2::Identity()).norm());
}

// Membership checks of Definition-level representation data: generators
// preserve the forms, relator targets are central (a cube root of unity times
// the identity), relator sources act trivially on the disc, and each cone
// word has target of finite order m_k up to center.
inline ValidationReport validate_representation(const RepresentationData& rep,
                                                double tol = kDefaultTol) {
    if (rep.cone_assignment.size() != rep.signature.cone_orders.size())
        throw std::invalid_argument("one cone word per cone point required");
    ValidationReport report;
    report.tol = tol;
    auto add = [&](std::string name, double residual) {
        report.max_residual = std::max(report.max_residual, residual);
        report.checks.push_back({std::move(name), residual});
    };

    for (std::size_t i = 0; i < rep.generators.size(); ++i) {
        add("source " + std::to_string(i + 1) + " in SU(1,1)",
            su11_residual(rep.generators[i].source));
        add("target " + std::to_string(i + 1) + " in SU(2,1)",
            su21_residual(rep.generators[i].target));
    }
    for (std::size_t j = 0; j < rep.relators.size(); ++j) {
        add("relator " + std::to_string(j + 1) + " source +-I",
            plus_minus_identity_residual(evaluate_source_word(rep, rep.relators[j])));
        add("relator " + std::to_string(j + 1) + " target central",
            central_residual(evaluate_target_word(rep, rep.relators[j])));
    }
    for (std::size_t k = 0; k < rep.cone_assignment.size(); ++k) {
        const int m = rep.signature.cone_orders[k];
        Matrix3 w = evaluate_target_word(rep, rep.cone_assignment[k]);
        Matrix3 pw = Matrix3::Identity();
        for (int it = 0; it < m; ++it) pw = pw * w;
        add("cone " + std::to_string(k + 1) + " target order " + std::to_string(m),
            central_residual(pw));
    }
    report.valid = report.max_residual <= tol;
    return report;
}

// ---------------------------------------------------------------------------
// Built-in representation families
// ---------------------------------------------------------------------------

enum class TargetStyle { Holomorphic, Antiholomorphic, Trivial };

// Genus-2 surface group from the octagon side pairings, embedded in the
// stabilizer of the complex geodesic {(1,u,0)}. The vertex-cycle relator
// evaluates to +I already in SU(1,1), so the block targets are exactly
// relator-central.
inline RepresentationData genus2_representation(TargetStyle style = TargetStyle::Holomorphic) {
    const GeodesicPolygon oct = octagon_domain();
    RepresentationData rep;
    rep.signature = OrbifoldSignature(2, {});
    for (const Matrix2& g : octagon_generators(oct)) {
        Matrix3 t;
        switch (style) {
            case TargetStyle::Holomorphic: t = block_embed(g); break;
            case TargetStyle::Antiholomorphic: t = block_embed(g).conjugate(); break;
            case TargetStyle::Trivial: t = Matrix3::Identity(); break;
        }
        rep.generators.push_back({g, t});
    }
    rep.relators = {octagon_relator_word()};
    return rep;
}

namespace detail {

inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a > M_PI) a -= 2.0 * M_PI;
    if (a < -M_PI) a += 2.0 * M_PI;
    return a;
}

inline int power_sign(const Matrix2& g, int m) {
    Matrix2 p = Matrix2::Identity();
    for (int i = 0; i < m; ++i) p = p * g;
    return p(0, 0).real() >= 0.0 ? +1 : -1;
}

// Normal-bundle phases for the triangle targets. Each cone condition
// e^{3 i m phi} = sign(g^m) is solvable on its own; the product condition
// 3(phi1+phi2+phi3) = 0 (mod 2pi) generally is not, and the minimal leftover
// defect is returned. It is the Euler-number obstruction to a
// geodesic-stabilizing representation of the triangle orbifold group and is
// reported by validate_representation rather than hidden.
struct TrianglePhases {
    double phi[3];
    double defect; // |3(phi1+phi2+phi3) mod 2pi|
};

inline TrianglePhases solve_triangle_phases(int p, int q, int r, int sx, int sy, int sz) {
    const int m[3] = {p, q, r};
    const double base[3] = {sx < 0 ? M_PI : 0.0, sy < 0 ? M_PI : 0.0, sz < 0 ? M_PI : 0.0};
    TrianglePhases best{};
    best.defect = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 3 * m[0]; ++a)
        for (int b = 0; b < 3 * m[1]; ++b)
            for (int c = 0; c < 3 * m[2]; ++c) {
                const double f0 = (base[0] + 2.0 * M_PI * a) / (3.0 * m[0]);
                const double f1 = (base[1] + 2.0 * M_PI * b) / (3.0 * m[1]);
                const double f2 = (base[2] + 2.0 * M_PI * c) / (3.0 * m[2]);
                const double defect = std::abs(wrap_angle(3.0 * (f0 + f1 + f2)));
                if (defect < best.defect) best = TrianglePhases{{f0, f1, f2}, defect};
            }
    return best;
}

} // namespace detail

// (p,q,r) rotation group with geodesic-stabilizing targets. Sources are the
// vertex rotations x, y and z = (xy)^{-1}, so the product relator closes at
// +I exactly; target phases are chosen so every cone word is exactly central
// and the product-relator defect is minimal (zero is unreachable for
// hyperbolic triangles; see solve_triangle_phases).
inline RepresentationData triangle_representation(int p, int q, int r,
                                                  TargetStyle style = TargetStyle::Holomorphic) {
    const TriangleGenerators tg = triangle_generators(p, q, r);
    const int sx = detail::power_sign(tg.x, p);
    const int sy = detail::power_sign(tg.y, q);
    const int sz = detail::power_sign(tg.z, r);
    const auto phases = detail::solve_triangle_phases(p, q, r, sx, sy, sz);

    RepresentationData rep;
    rep.signature = OrbifoldSignature(0, {p, q, r});
    const Matrix2 sources[3] = {tg.x, tg.y, tg.z};
    for (int i = 0; i < 3; ++i) {
        Matrix3 t = block_embed_phased(sources[i], phases.phi[i]);
        if (style == TargetStyle::Antiholomorphic) t = t.conjugate();
        if (style == TargetStyle::Trivial) t = Matrix3::Identity();
        rep.generators.push_back({sources[i], t});
    }
    rep.relators.resize(4);
    rep.relators[0].assign(p, 1);
    rep.relators[1].assign(q, 2);
    rep.relators[2].assign(r, 3);
    rep.relators[3] = {1, 2, 3};

    // cone words follow the sorted signature order
    std::vector<std::pair<int, int>> order_gen = {{p, 1}, {q, 2}, {r, 3}};
    std::stable_sort(order_gen.begin(), order_gen.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [m, g] : order_gen) rep.cone_assignment.push_back({g});
    return rep;
}

// ---------------------------------------------------------------------------
// Equivariant maps
// ---------------------------------------------------------------------------

// Lift of a map from the base orbifold into the ball, as a smooth family of
// negative ambient vectors over the disc. Derivatives are either supplied
// analytically or taken by central differences with a boundary-shrinking
// step.
struct EquivariantMap {
    std::function<HVector(Complex)> lift;
    bool analytic = false;
    std::function<HVector(Complex)> dx, dy;
    double step_scale = 1e-5; // h = step_scale * (1 - |u|)
    std::string provenance = "user";
};

inline std::pair<HVector, HVector> map_derivatives(const EquivariantMap& map, Complex u) {
    if (map.analytic) return {map.dx(u), map.dy(u)};
    const double h = map.step_scale * (1.0 - std::abs(u));
    if (!(h > 0.0) || std::abs(u) + h >= 1.0 - kBoundaryEps)
        throw DerivativeBreakdown("central difference step hit the disc boundary");
    const HVector fx = (map.lift(u + h) - map.lift(u - h)) / (2.0 * h);
    const HVector fy = (map.lift(u + Complex(0.0, h)) - map.lift(u - Complex(0.0, h))) /
                       (2.0 * h);
    return {fx, fy};
}

inline double projective_distance(const HVector& a, const HVector& b) {
    const Complex ip = b.dot(a);
    if (std::abs(ip) == 0.0) return std::sqrt(2.0);
    const Complex phase = ip / std::abs(ip);
    return (a / a.norm() - phase * (b / b.norm())).norm();
}

// Max over samples and generators of the projective deviation between
// lift(A u) and M lift(u).
inline double equivariance_residual(const EquivariantMap& map, const RepresentationData& rep,
                                    int samples = 64, unsigned seed = 2024) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Complex u = random_unit_disc(rng, 0.95);
        for (const auto& gen : rep.generators) {
            const HVector lhs = map.lift(moebius(gen.source, u));
            const HVector rhs = gen.target * map.lift(u);
            worst = std::max(worst, projective_distance(lhs, rhs));
        }
    }
    return worst;
}

enum class MapKind { HolomorphicGeodesic, Antiholomorphic, Constant };

namespace detail {

inline std::optional<HVector> common_negative_fixed_vector(const RepresentationData& rep) {
    std::vector<SubspaceBasis> candidates{Eigen::MatrixXcd::Identity(3, 3)};
    for (const auto& gen : rep.generators) {
        if (central_residual(gen.target) <= 1e-9) continue;
        std::vector<SubspaceBasis> next;
        for (const auto& s : candidates)
            for (const auto& e : eigenspaces(gen.target))
                if (auto cap = intersect(s, e)) next.push_back(*cap);
        candidates = std::move(next);
        if (candidates.empty()) return std::nullopt;
    }
    for (const auto& s : candidates) {
        const Eigen::MatrixXcd gram = s.adjoint() * form_matrix() * s;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
        if (es.eigenvalues()(0) >= -1e-10) continue;
        const HVector v = s * es.eigenvectors().col(0);
        if (classify_point(v, 1e-8) == SignClass::Negative) return v;
    }
    return std::nullopt;
}

} // namespace detail

// Concrete witnesses of the equivariant-map existence lemma for the built-in
// representation classes. The audit rejects pairings the witness does not
// actually serve (e.g. the holomorphic lift against a generic irreducible
// representation).
inline EquivariantMap builtin_map(MapKind kind, const RepresentationData& rep,
                                  double audit_tol = 1e-8) {
    EquivariantMap map;
    map.analytic = true;
    switch (kind) {
        case MapKind::HolomorphicGeodesic:
            map.lift = [](Complex u) { return embed_disc(u); };
            map.dx = [](Complex) { return HVector(0.0, Complex(1.0, 0.0), 0.0); };
            map.dy = [](Complex) { return HVector(0.0, Complex(0.0, 1.0), 0.0); };
            map.provenance = "builtin-holomorphic";
            break;
        case MapKind::Antiholomorphic:
            map.lift = [](Complex u) { return embed_disc(std::conj(u)); };
            map.dx = [](Complex) { return HVector(0.0, Complex(1.0, 0.0), 0.0); };
            map.dy = [](Complex) { return HVector(0.0, Complex(0.0, -1.0), 0.0); };
            map.provenance = "builtin-antiholomorphic";
            break;
        case MapKind::Constant: {
            auto fixed = detail::common_negative_fixed_vector(rep);
            if (!fixed)
                throw IncompatibleRepresentation(
                    "no common negative fixed point for a constant map");
            const HVector p0 = *fixed;
            map.lift = [p0](Complex) { return p0; };
            map.dx = [](Complex) { return HVector::Zero().eval(); };
            map.dy = [](Complex) { return HVector::Zero().eval(); };
            map.provenance = "builtin-constant";
            break;
        }
    }
    const double res = equivariance_residual(map, rep);
    if (res > audit_tol)
        throw IncompatibleRepresentation("equivariance audit failed, residual " +
                                         std::to_string(res));
    return map;
}

// Conjugated data (C M C^{-1}, C lift): the same character-variety point.
inline RepresentationData conjugate_representation(const RepresentationData& rep,
                                                   const Matrix3& c) {
    RepresentationData out = rep;
    const Matrix3 cinv = c.inverse();
    for (auto& gen : out.generators) gen.target = c * gen.target * cinv;
    return out;
}

inline EquivariantMap conjugate_map(const EquivariantMap& map, const Matrix3& c) {
    EquivariantMap out = map;
    auto lift = map.lift;
    out.lift = [lift, c](Complex u) { return HVector(c * lift(u)); };
    if (map.analytic) {
        auto dx = map.dx, dy = map.dy;
        out.dx = [dx, c](Complex u) { return HVector(c * dx(u)); };
        out.dy = [dy, c](Complex u) { return HVector(c * dy(u)); };
    }
    return out;
}

} // namespace orbi
