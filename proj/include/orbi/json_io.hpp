#pragma once

#include <json.hpp>

#include <limits>

#include "orbi/covering.hpp"
#include "orbi/domains.hpp"
#include "orbi/representation.hpp"
#include "orbi/toledo.hpp"

// JSON wire formats. Exact values are always num/den pairs, never floats;
// complex numbers are [re, im]; matrices are row-major nested arrays.
namespace orbi {

using Json = nlohmann::json;

inline Json to_json(const Rational& r) {
    const BigInt lo = std::numeric_limits<std::int64_t>::min();
    const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (r.num() < lo || r.num() > hi || r.den() > hi)
        throw Error("rational exceeds the 64-bit JSON range: " + r.str());
    return Json{{"num", r.num().convert_to<std::int64_t>()},
                {"den", r.den().convert_to<std::int64_t>()}};
}

inline Rational rational_from_json(const Json& j) {
    return Rational(BigInt(j.at("num").get<std::int64_t>()),
                    BigInt(j.at("den").get<std::int64_t>()));
}

inline Json to_json(const OrbifoldSignature& sig) {
    return Json{{"genus", sig.genus}, {"cone_orders", sig.cone_orders}};
}

inline OrbifoldSignature signature_from_json(const Json& j) {
    return OrbifoldSignature(j.at("genus").get<unsigned>(),
                             j.at("cone_orders").get<std::vector<int>>());
}

inline Json to_json(const SeifertData& sd) {
    return Json{{"base", to_json(sd.base)}, {"q0", sd.q0}, {"windings", sd.windings}};
}

inline SeifertData seifert_from_json(const Json& j) {
    return SeifertData(signature_from_json(j.at("base")), j.at("q0").get<long long>(),
                       j.at("windings").get<std::vector<long long>>());
}

inline Json to_json(const CoveringData& cov) {
    return Json{{"degree", cov.degree}, {"stabilizers", cov.stabilizers}};
}

inline CoveringData covering_from_json(const Json& j) {
    return CoveringData{j.at("degree").get<int>(),
                        j.at("stabilizers").get<std::vector<std::vector<int>>>()};
}

inline Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
    return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

template <typename Mat>
inline Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <typename Mat>
inline Mat matrix_from_json(const Json& j) {
    Mat m;
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.cols(); ++k) m(i, k) = complex_from_json(j.at(i).at(k));
    return m;
}

inline Json to_json(const RepresentationData& rep) {
    Json gens = Json::array();
    for (const auto& g : rep.generators)
        gens.push_back(Json{{"source", matrix_to_json(g.source)},
                            {"target", matrix_to_json(g.target)}});
    return Json{{"signature", to_json(rep.signature)},
                {"generators", gens},
                {"relators", rep.relators},
                {"cone_assignment", rep.cone_assignment}};
}

inline RepresentationData representation_from_json(const Json& j) {
    RepresentationData rep;
    rep.signature = signature_from_json(j.at("signature"));
    for (const auto& g : j.at("generators"))
        rep.generators.push_back({matrix_from_json<Matrix2>(g.at("source")),
                                  matrix_from_json<Matrix3>(g.at("target"))});
    rep.relators = j.at("relators").get<std::vector<std::vector<int>>>();
    rep.cone_assignment = j.at("cone_assignment").get<std::vector<std::vector<int>>>();
    return rep;
}

inline Json to_json(const GeodesicPolygon& poly) {
    Json verts = Json::array();
    for (Complex v : poly.vertices) verts.push_back(to_json(v));
    Json pairings = Json::array();
    for (const auto& m : poly.side_pairings) pairings.push_back(matrix_to_json(m));
    return Json{{"vertices", verts},
                {"cone_orders", poly.cone_orders},
                {"side_partner", poly.side_partner},
                {"side_pairings", pairings}};
}

inline GeodesicPolygon polygon_from_json(const Json& j) {
    GeodesicPolygon poly;
    for (const auto& v : j.at("vertices")) poly.vertices.push_back(complex_from_json(v));
    poly.cone_orders = j.at("cone_orders").get<std::vector<int>>();
    poly.side_partner = j.at("side_partner").get<std::vector<int>>();
    if (j.contains("side_pairings"))
        for (const auto& m : j.at("side_pairings"))
            poly.side_pairings.push_back(matrix_from_json<Matrix2>(m));
    return poly;
}

inline Json to_json(const LatticeVerdict& v) {
    return Json{{"member", v.member},
                {"nearest", to_json(v.nearest)},
                {"generator", to_json(v.generator)},
                {"deviation", v.deviation}};
}

inline Json to_json(const ValidationReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back(Json{{"name", c.name}, {"residual", c.residual}});
    return Json{{"valid", report.valid},
                {"tol", report.tol},
                {"max_residual", report.max_residual},
                {"checks", checks}};
}

inline Json to_json(const ToledoResult& r) {
    return Json{{"tau", r.tau},
                {"tau_rel", r.tau_rel},
                {"quadrature_rel_tol", r.quadrature_rel_tol},
                {"quadrature_levels", r.quadrature.levels},
                {"lattice", to_json(r.lattice)},
                {"validation", to_json(r.validation)}};
}

} // namespace orbi
