#include <catch2/catch_amalgamated.hpp>

#include "orbi/covering.hpp"
#include "orbi/seifert.hpp"
#include "test_support.hpp"

using namespace orbi;

TEST_CASE("Euler number of Seifert data") {
    CHECK(euler_number(SeifertData(OrbifoldSignature(0, {3, 5}), 0, {0, 0})) == Rational(0));
    CHECK(euler_number(SeifertData(OrbifoldSignature(0, {2, 2}), 0, {1, 0})) == Rational(1, 2));
    CHECK(euler_number(SeifertData(OrbifoldSignature(2, {}), -3, {})) == Rational(-3));
}

TEST_CASE("tangent orbibundle reproduces chi") {
    const SeifertData genus2 = tangent_seifert(OrbifoldSignature(2, {}));
    CHECK(genus2.q0 == -2);
    CHECK(euler_number(genus2) == Rational(-2));

    const SeifertData tri = tangent_seifert(OrbifoldSignature(0, {2, 3, 7}));
    CHECK(tri.q0 == -1);
    CHECK(tri.windings == std::vector<long long>{1, 1, 1});
    CHECK(euler_number(tri) == Rational(-1, 42));

    CHECK(euler_number(tangent_seifert(OrbifoldSignature(0, {3, 3, 4}))) == Rational(-1, 12));
}

TEST_CASE("fiber classes") {
    CHECK(fiber_class(1).coefficient == Rational(1));
    CHECK(fiber_class(7).coefficient == Rational(1, 7));
    CHECK(fiber_class(2).coefficient == Rational(1, 2));
    CHECK_THROWS_AS(fiber_class(0), std::invalid_argument);
}

TEST_CASE("lattice check on Euler numbers") {
    CHECK(lattice_check(Rational(-1, 42), OrbifoldSignature(0, {2, 3, 7})));
    CHECK_FALSE(lattice_check(Rational(1, 84), OrbifoldSignature(0, {2, 3, 7})));
    CHECK(lattice_check(Rational(5), OrbifoldSignature(3, {})));
}

TEST_CASE("relative Euler number") {
    CHECK(relative_euler(tangent_seifert(OrbifoldSignature(0, {2, 3, 7}))) == Rational(1));
    CHECK(relative_euler(SeifertData(OrbifoldSignature(2, {}), 0, {})) == Rational(0));
    CHECK(relative_euler(SeifertData(OrbifoldSignature(2, {}), 1, {})) == Rational(-1, 2));
    CHECK_THROWS_AS(relative_euler(SeifertData(OrbifoldSignature(1, {}), 1, {})),
                    ZeroEulerCharacteristic);
}

TEST_CASE("covered signatures") {
    // (0;3,3) threefold covered by the sphere
    CHECK(covered_signature(OrbifoldSignature(0, {3, 3}), CoveringData{3, {{1}, {1}}}) ==
          OrbifoldSignature(0, {}));
    // identity covering
    const OrbifoldSignature sig(1, {2, 4});
    CHECK(covered_signature(sig, identity_covering(sig)) == sig);
    // smooth degree-84 cover of (0;2,3,7) is the genus-2 surface
    CoveringData smooth;
    smooth.degree = 84;
    smooth.stabilizers = {std::vector<int>(42, 1), std::vector<int>(28, 1),
                          std::vector<int>(12, 1)};
    CHECK(covered_signature(OrbifoldSignature(0, {2, 3, 7}), smooth) ==
          OrbifoldSignature(2, {}));
}

TEST_CASE("inconsistent covering data is rejected") {
    const OrbifoldSignature base(0, {2, 2});
    CHECK_THROWS_AS(covered_signature(base, CoveringData{2, {{2, 2}, {1}}}), NonIntegralGenus);
    CHECK_THROWS_AS(covered_signature(base, CoveringData{2, {{2}, {2}}}),
                    std::invalid_argument); // orbit counts miss the degree
    CHECK_THROWS_AS(covered_signature(base, CoveringData{2, {{3}, {1}}}),
                    std::invalid_argument); // stabilizer does not divide
    CHECK_THROWS_AS(covered_signature(base, CoveringData{2, {{1}}}), std::invalid_argument);
}

TEST_CASE("pullback along coverings") {
    // spindle (0;2,2) doubled by the sphere: e = 1/2 -> 1
    const SeifertData spindle(OrbifoldSignature(0, {2, 2}), 0, {1, 0});
    const CoveringData doubling{2, {{1}, {1}}};
    const SeifertData lifted = pullback(spindle, doubling);
    CHECK(lifted.base == OrbifoldSignature(0, {}));
    CHECK(euler_number(lifted) == Rational(1));

    // identity covering keeps the Euler number
    const SeifertData sd(OrbifoldSignature(1, {3, 5}), 2, {1, -2});
    CHECK(euler_number(pullback(sd, identity_covering(sd.base))) == euler_number(sd));

    // tangent bundle of (0;2,3,7) pulled back along the smooth degree-84 cover
    CoveringData smooth;
    smooth.degree = 84;
    smooth.stabilizers = {std::vector<int>(42, 1), std::vector<int>(28, 1),
                          std::vector<int>(12, 1)};
    const SeifertData tangent_lift = pullback(tangent_seifert(OrbifoldSignature(0, {2, 3, 7})),
                                              smooth);
    CHECK(euler_number(tangent_lift) == Rational(-2));
    CHECK(tangent_lift.base == OrbifoldSignature(2, {}));
}

TEST_CASE("Euler numbers lie in the base lattice") {
    test::Rng rng(9001);
    for (int it = 0; it < 1000; ++it) {
        const SeifertData sd = test::random_seifert(rng);
        CHECK(lattice_check(euler_number(sd), sd.base));
    }
}

TEST_CASE("pullback multiplies the Euler number by the degree") {
    test::Rng rng(9002);
    for (int it = 0; it < 1000; ++it) {
        const SeifertData sd = test::random_seifert(rng);
        const CoveringData cov = test::random_covering(rng, sd.base);
        const SeifertData lifted = pullback(sd, cov);
        CHECK(euler_number(lifted) == Rational(cov.degree) * euler_number(sd));
        if (!euler_characteristic(sd.base).is_zero())
            CHECK(relative_euler(lifted) == relative_euler(sd));
        CHECK(lattice_check(euler_number(lifted), lifted.base));
    }
}

TEST_CASE("tangent bundle commutes with coverings on Euler numbers") {
    test::Rng rng(9003);
    for (int it = 0; it < 300; ++it) {
        const OrbifoldSignature base = test::random_signature(rng);
        const CoveringData cov = test::random_covering(rng, base);
        const OrbifoldSignature cover = covered_signature(base, cov);
        CHECK(euler_number(pullback(tangent_seifert(base), cov)) ==
              euler_number(tangent_seifert(cover)));
        CHECK(euler_characteristic(cover) ==
              Rational(cov.degree) * euler_characteristic(base));
    }
}
