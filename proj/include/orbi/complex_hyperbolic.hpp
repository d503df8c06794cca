#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "orbi/errors.hpp"

namespace orbi {

using Complex = std::complex<double>;
using HVector = Eigen::Vector3cd;
using Matrix3 = Eigen::Matrix3cd;

inline constexpr double kDefaultTol = 1e-9;

// Hermitian form of signature (-,+,+) in the fixed basis e1,e2,e3,
// linear in the FIRST slot and conjugate-linear in the second.
inline Complex herm(const HVector& u, const HVector& v) {
    return -u(0) * std::conj(v(0)) + u(1) * std::conj(v(1)) + u(2) * std::conj(v(2));
}

inline Matrix3 form_matrix() {
    Matrix3 j = Matrix3::Zero();
    j(0, 0) = -1.0;
    j(1, 1) = 1.0;
    j(2, 2) = 1.0;
    return j;
}

enum class SignClass { Negative, Isotropic, Positive };

inline SignClass classify_point(const HVector& p, double tol = kDefaultTol) {
    const double n2 = p.squaredNorm();
    if (n2 == 0.0) throw ZeroVector("cannot classify the zero vector");
    const double s = std::real(herm(p, p));
    if (std::abs(s) <= tol * n2) return SignClass::Isotropic;
    return s < 0 ? SignClass::Negative : SignClass::Positive;
}

// Projective point with its sign class. Representatives are only ever
// compared projectively.
struct HPoint {
    HVector rep;
    SignClass sign_class;

    static HPoint of(const HVector& v, double tol = kDefaultTol) {
        return HPoint{v, classify_point(v, tol)};
    }
};

inline bool projectively_equal(const HVector& a, const HVector& b, double tol = kDefaultTol) {
    const Complex ip = b.dot(a); // Eigen: conj(b)^T a
    const double na = a.norm(), nb = b.norm();
    if (na == 0.0 || nb == 0.0) return false;
    return std::sqrt(std::max(0.0, na * na * nb * nb - std::norm(ip))) <= tol * na * nb;
}

// Tangent vector at a non-isotropic point, stored as the image t(p) in
// p-perp of the stored representative.
struct HTangent {
    HPoint base;
    HVector vec;
};

inline HVector project_to_tangent(const HPoint& p, const HVector& w) {
    const Complex pp = herm(p.rep, p.rep);
    if (p.sign_class == SignClass::Isotropic)
        throw IsotropicBase("tangent projection at an isotropic point");
    return w - (herm(w, p.rep) / pp) * p.rep;
}

inline HTangent tangent(const HPoint& p, const HVector& v, double tol = kDefaultTol) {
    if (p.sign_class == SignClass::Isotropic)
        throw IsotropicBase("tangent space undefined at isotropic points");
    if (std::abs(herm(p.rep, v)) > tol * p.rep.norm() * v.norm())
        throw BaseMismatch("vector is not form-orthogonal to the base point");
    return HTangent{p, v};
}

inline void require_same_base(const HPoint& p, const HTangent& t, double tol = 1e-7) {
    if (!projectively_equal(p.rep, t.base.rep, tol))
        throw BaseMismatch("tangent vectors based at different points");
}

struct MetricValue {
    Complex h;
    double g;
    double omega;
};

// h(s,t) = -<s(p),t(p)>/<p,p>, g = Re h, omega = Im h.
inline MetricValue metric(const HPoint& p, const HTangent& s, const HTangent& t) {
    if (p.sign_class == SignClass::Isotropic)
        throw IsotropicBase("metric undefined at isotropic points");
    require_same_base(p, s);
    require_same_base(p, t);
    const Complex h = -herm(s.vec, t.vec) / herm(p.rep, p.rep);
    return MetricValue{h, h.real(), h.imag()};
}

// t*(v) = (<v,t(p)>/<p,p>) p, the adjoint p-perp -> C p of a tangent vector.
inline HVector adjoint_apply(const HTangent& t, const HVector& v) {
    const HPoint& p = t.base;
    if (p.sign_class == SignClass::Isotropic)
        throw IsotropicBase("adjoint undefined at isotropic points");
    return (herm(v, t.vec) / herm(p.rep, p.rep)) * p.rep;
}

namespace detail {

// Tangents act on C p as t(lambda p) = lambda t(p).
inline HVector tangent_apply(const HTangent& t, const HVector& w) {
    const Complex lambda = herm(w, t.base.rep) / herm(t.base.rep, t.base.rep);
    return lambda * t.vec;
}

struct NormalizedFrame {
    HPoint p;                 // <p,p> = -1
    std::vector<HVector> vecs;
};

// Rescale the representative to <p,p> = -1 and the tangent images with it.
inline NormalizedFrame normalize_at(const HPoint& p, std::initializer_list<HVector> vs) {
    if (p.sign_class != SignClass::Negative)
        throw NonNegativePoint("curvature frame requires a negative base point");
    const double s = std::sqrt(-std::real(herm(p.rep, p.rep)));
    NormalizedFrame f;
    f.p = HPoint{p.rep / s, SignClass::Negative};
    for (const auto& v : vs) f.vecs.push_back(v / s);
    return f;
}

} // namespace detail

// Overall sign of the curvature tensor. The four-term composite of tangent
// maps and adjoints changes sign with the adjoint normalization at <p,p>=-1;
// this constant is pinned by the anchors K(t,it) = -4, K(t,n) = -1 and by
// the frame values R(t1,t2)t = -4at - bn, R(t1,t2)n = conj(b)t - 2an.
inline constexpr double kCurvatureSign = -1.0;

// R(t1,t2)s = -s t1* t2 - t2 t1* s + s t2* t1 + t1 t2* s, evaluated at the
// representative with <p,p> = -1 and multiplied by kCurvatureSign.
inline HTangent curvature(const HPoint& p, const HTangent& t1, const HTangent& t2,
                          const HTangent& s) {
    require_same_base(p, t1);
    require_same_base(p, t2);
    require_same_base(p, s);
    const auto f = detail::normalize_at(p, {t1.vec, t2.vec, s.vec});
    const HTangent a{f.p, f.vecs[0]}, b{f.p, f.vecs[1]}, c{f.p, f.vecs[2]};

    const HVector term1 = detail::tangent_apply(c, adjoint_apply(a, b.vec));
    const HVector term2 = detail::tangent_apply(b, adjoint_apply(a, c.vec));
    const HVector term3 = detail::tangent_apply(c, adjoint_apply(b, a.vec));
    const HVector term4 = detail::tangent_apply(a, adjoint_apply(b, c.vec));
    return HTangent{f.p, kCurvatureSign * (-term1 - term2 + term3 + term4)};
}

// K = g(R(t1,t2)t1, t2) / (g(t1,t1)g(t2,t2) - g(t1,t2)^2), in [-4,-1].
inline double sectional_curvature(const HPoint& p, const HTangent& t1, const HTangent& t2,
                                  double tol = 1e-12) {
    const HTangent r = curvature(p, t1, t2, t1);
    const HTangent u1{r.base, t1.vec / std::sqrt(-std::real(herm(p.rep, p.rep)))};
    const HTangent u2{r.base, t2.vec / std::sqrt(-std::real(herm(p.rep, p.rep)))};
    const double g11 = metric(r.base, u1, u1).g;
    const double g22 = metric(r.base, u2, u2).g;
    const double g12 = metric(r.base, u1, u2).g;
    const double denom = g11 * g22 - g12 * g12;
    if (denom <= tol * std::max(1.0, g11 * g22))
        throw DegeneratePlane("tangent vectors are R-linearly dependent");
    return metric(r.base, r, u2).g / denom;
}

// Trace of v -> R(t1,t2)v over a C-basis of the tangent space, computed by
// expanding against an h-orthonormal basis of p-perp. Independent of the
// 6 i omega shortcut it is tested against.
inline Complex curvature_trace(const HPoint& p, const HTangent& t1, const HTangent& t2) {
    const auto f = detail::normalize_at(p, {t1.vec, t2.vec});
    const HPoint& q = f.p;

    // h-orthonormal basis of q-perp via Gram-Schmidt on projected axis vectors
    std::vector<HVector> basis;
    for (int axis = 0; axis < 3 && basis.size() < 2; ++axis) {
        HVector cand = project_to_tangent(q, HVector::Unit(axis));
        for (const auto& b : basis) cand -= (herm(cand, b) / herm(b, b)) * b;
        const double n2 = std::real(herm(cand, cand)); // positive definite on q-perp
        if (n2 > 1e-12) basis.push_back(cand / std::sqrt(n2));
    }
    const HTangent a{q, f.vecs[0]}, b{q, f.vecs[1]};
    Complex tr = 0.0;
    for (const auto& u : basis) {
        const HTangent ru = curvature(q, a, b, HTangent{q, u});
        tr += herm(ru.vec, u); // coefficient on u in the orthonormal expansion
    }
    return tr;
}

// cosh^2 d = <p,q><q,p> / (<p,p><q,q>). Matches arclength of the metric g
// along real segments: distance((1,0,0),(1,r,0)) = atanh r.
inline double distance(const HPoint& p, const HPoint& q) {
    if (p.sign_class != SignClass::Negative || q.sign_class != SignClass::Negative)
        throw NonNegativePoint("distance requires negative points");
    const Complex pq = herm(p.rep, q.rep);
    const double c2 = std::real(pq * std::conj(pq)) /
                      std::real(herm(p.rep, p.rep) * herm(q.rep, q.rep));
    return std::acosh(std::sqrt(std::max(1.0, c2)));
}

struct Isometry {
    Matrix3 m;
};

inline double su21_residual(const Matrix3& m) {
    const Matrix3 j = form_matrix();
    const double form_dev = (m.adjoint() * j * m - j).norm();
    const double det_dev = std::abs(m.determinant() - Complex(1.0));
    return std::max(form_dev, det_dev);
}

inline bool in_su21(const Matrix3& m, double tol = kDefaultTol) {
    return su21_residual(m) <= tol;
}

inline const std::array<Complex, 3>& cube_roots_of_unity() {
    static const std::array<Complex, 3> roots = {
        Complex(1.0, 0.0),
        std::polar(1.0, 2.0 * M_PI / 3.0),
        std::polar(1.0, -2.0 * M_PI / 3.0),
    };
    return roots;
}

inline double central_residual(const Matrix3& m) {
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& w : cube_roots_of_unity())
        best = std::min(best, (m - w * Matrix3::Identity()).norm());
    return best;
}

enum class IsometryKind { Central, Elliptic, Other };

struct IsometryClassification {
    IsometryKind kind = IsometryKind::Other;
    std::optional<HPoint> fixed_point;      // negative eigenvector, when elliptic
    std::optional<HPoint> fixed_line_polar; // polar of the pointwise-fixed projective
                                            // line, when two eigenvalues coincide
};

// Elliptic iff some eigenvector is negative. With a repeated eigenvalue the
// eigenvector of the simple eigenvalue is the polar of the projective line
// the repeated eigenspace fixes pointwise; that line meets the ball in a
// complex geodesic exactly when the polar is positive.
inline IsometryClassification classify_isometry(const Isometry& iso, double tol = kDefaultTol) {
    if (!in_su21(iso.m, std::max(tol, 1e-7)))
        throw NotInSU21("matrix does not preserve the form");
    IsometryClassification out;
    if (central_residual(iso.m) <= std::max(tol, 1e-9)) {
        out.kind = IsometryKind::Central;
        return out;
    }

    Eigen::ComplexEigenSolver<Matrix3> es(iso.m);
    const auto& vals = es.eigenvalues();
    const auto& vecs = es.eigenvectors();

    const double cluster_tol = 1e-7;
    for (int i = 0; i < 3; ++i) {
        const HVector v = vecs.col(i);
        if ((iso.m * v - vals(i) * v).norm() > 1e-6) continue; // defective direction
        if (classify_point(v, 1e-8) == SignClass::Negative) {
            out.kind = IsometryKind::Elliptic;
            out.fixed_point = HPoint{v, SignClass::Negative};
            break;
        }
    }
    if (out.kind != IsometryKind::Elliptic) return out;

    // repeated eigenvalue -> report the simple one's eigenvector as polar
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (std::abs(vals(j) - vals(k)) <= cluster_tol &&
            std::abs(vals(i) - vals(j)) > cluster_tol) {
            out.fixed_line_polar = HPoint::of(vecs.col(i), 1e-8);
            break;
        }
    }
    return out;
}

// Hermitian cross product: orthogonal to both arguments, positive when both
// inputs are negative. The complex geodesic through two negative points is
// P(polar-perp) meet the ball.
inline HPoint polar_of(const HPoint& p1, const HPoint& p2, double tol = kDefaultTol) {
    const Matrix3 j = form_matrix();
    const HVector a = (j * p1.rep).conjugate();
    const HVector b = (j * p2.rep).conjugate();
    const HVector q = a.cross(b);
    if (q.norm() <= tol * p1.rep.norm() * p2.rep.norm())
        throw CoincidentPoints("polar of projectively equal points");
    return HPoint::of(q, tol);
}

struct ComplexGeodesic {
    HPoint polar; // positive

    bool contains(const HPoint& q, double tol = kDefaultTol) const {
        return std::abs(herm(q.rep, polar.rep)) <= tol * q.rep.norm() * polar.rep.norm();
    }
};

inline ComplexGeodesic complex_geodesic_polar(const HPoint& p) {
    if (p.sign_class != SignClass::Positive)
        throw NonNegativePoint("complex geodesic polar must be positive");
    return ComplexGeodesic{p};
}

namespace detail {

using SubspaceBasis = Eigen::MatrixXcd; // orthonormal columns

inline std::vector<SubspaceBasis> eigenspaces(const Matrix3& m, double cluster_tol = 1e-7) {
    Eigen::ComplexEigenSolver<Matrix3> es(m);
    const auto& vals = es.eigenvalues();
    std::vector<bool> used(3, false);
    std::vector<SubspaceBasis> spaces;
    for (int i = 0; i < 3; ++i) {
        if (used[i]) continue;
        std::vector<int> cluster{i};
        used[i] = true;
        for (int j = i + 1; j < 3; ++j)
            if (!used[j] && std::abs(vals(i) - vals(j)) <= cluster_tol) {
                cluster.push_back(j);
                used[j] = true;
            }
        // span by nullspace of (m - lambda I); robust against solver vectors
        const Complex lambda = vals(i);
        Eigen::JacobiSVD<Matrix3> svd(m - lambda * Matrix3::Identity(), Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        const double cutoff = std::max(1e-8, 1e-8 * sv(0));
        int dim = 0;
        for (int k = 0; k < 3; ++k)
            if (sv(k) <= cutoff) ++dim;
        dim = std::max<int>(dim, 1);
        spaces.push_back(svd.matrixV().rightCols(dim));
    }
    return spaces;
}

inline std::optional<SubspaceBasis> intersect(const SubspaceBasis& a, const SubspaceBasis& b,
                                              double tol = 1e-8) {
    // x in span(a) with (I - P_b) x = 0
    const Eigen::MatrixXcd residual =
        a - b * (b.adjoint() * a); // (I - bb^H) a, b orthonormal
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(residual, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int dim = 0;
    for (int k = 0; k < sv.size(); ++k)
        if (sv(k) <= tol) ++dim;
    if (static_cast<int>(a.cols()) > sv.size()) dim += a.cols() - sv.size();
    if (dim == 0) return std::nullopt;
    Eigen::MatrixXcd basis = a * svd.matrixV().rightCols(dim);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(basis);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(3, dim);
    return q;
}

// Most positive direction of the restricted form on the subspace.
inline std::optional<HVector> most_positive_vector(const SubspaceBasis& s) {
    const Eigen::MatrixXcd gram = s.adjoint() * form_matrix() * s;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    const int last = static_cast<int>(gram.rows()) - 1;
    if (es.eigenvalues()(last) <= 1e-10) return std::nullopt;
    return HVector(s * es.eigenvectors().col(last));
}

} // namespace detail

// Common positive eigenvector of all generators, i.e. the polar of a complex
// geodesic stable under the whole group; nullopt when none exists. Central
// generators constrain nothing and are skipped.
inline std::optional<HPoint> stable_complex_geodesic(const std::vector<Isometry>& gens,
                                                     double tol = 1e-7) {
    std::vector<detail::SubspaceBasis> candidates;
    candidates.push_back(Eigen::MatrixXcd::Identity(3, 3));
    for (const auto& g : gens) {
        if (!in_su21(g.m, std::max(tol, 1e-7)))
            throw NotInSU21("generator does not preserve the form");
        if (central_residual(g.m) <= tol) continue;
        std::vector<detail::SubspaceBasis> next;
        for (const auto& s : candidates)
            for (const auto& e : detail::eigenspaces(g.m))
                if (auto cap = detail::intersect(s, e)) next.push_back(*cap);
        candidates = std::move(next);
        if (candidates.empty()) return std::nullopt;
    }
    for (const auto& s : candidates) {
        const auto v = detail::most_positive_vector(s);
        if (!v) continue;
        if (classify_point(*v, 1e-8) != SignClass::Positive) continue;
        bool ok = true;
        for (const auto& g : gens) {
            const HVector gv = g.m * (*v);
            const Complex lambda = v->dot(gv) / v->squaredNorm();
            if ((gv - lambda * (*v)).norm() > tol * gv.norm()) {
                ok = false;
                break;
            }
        }
        if (ok) return HPoint{*v, SignClass::Positive};
    }
    return std::nullopt;
}

} // namespace orbi
