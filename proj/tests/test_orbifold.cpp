#include <catch2/catch_amalgamated.hpp>

#include "orbi/orbifold.hpp"
#include "test_support.hpp"

using namespace orbi;

TEST_CASE("Euler characteristic of signatures") {
    CHECK(euler_characteristic(OrbifoldSignature(2, {})) == Rational(-2));
    CHECK(euler_characteristic(OrbifoldSignature(1, {})) == Rational(0));
    // 2 - 1/2 - 2/3 - 6/7
    CHECK(euler_characteristic(OrbifoldSignature(0, {2, 3, 7})) == Rational(-1, 42));
    // 2 - 2/3 - 2/3 - 3/4
    CHECK(euler_characteristic(OrbifoldSignature(0, {3, 3, 4})) == Rational(-1, 12));
}

TEST_CASE("Euler lattice of signatures") {
    CHECK(euler_lattice(OrbifoldSignature(0, {})).generator == Rational(1));
    CHECK(euler_lattice(OrbifoldSignature(0, {2, 3, 7})).generator == Rational(1, 42));
    CHECK(euler_lattice(OrbifoldSignature(0, {2, 2})).generator == Rational(1, 2));
    CHECK(euler_lattice(OrbifoldSignature(3, {4, 6})).generator == Rational(1, 12));
}

TEST_CASE("lattice membership") {
    const RationalLattice l = euler_lattice(OrbifoldSignature(0, {2, 3, 7}));
    CHECK(l.contains(Rational(-1, 42)));
    CHECK(l.contains(Rational(5)));
    CHECK_FALSE(l.contains(Rational(1, 84)));
}

TEST_CASE("hyperbolicity screening") {
    CHECK(is_hyperbolic(OrbifoldSignature(0, {2, 3, 7})));
    CHECK(is_hyperbolic(OrbifoldSignature(2, {})));
    CHECK_FALSE(is_hyperbolic(OrbifoldSignature(1, {})));
    CHECK_FALSE(is_hyperbolic(OrbifoldSignature(0, {2, 3, 6}))); // chi = 0
    CHECK_FALSE(is_hyperbolic(OrbifoldSignature(0, {2, 2})));
}

TEST_CASE("goodness advisory follows the classical list") {
    CHECK_FALSE(is_good(OrbifoldSignature(0, {5})));    // teardrop
    CHECK_FALSE(is_good(OrbifoldSignature(0, {2, 3}))); // unequal spindle
    CHECK(is_good(OrbifoldSignature(0, {3, 3})));
    CHECK(is_good(OrbifoldSignature(0, {2, 3, 7})));
    CHECK(is_good(OrbifoldSignature(1, {})));
    CHECK(is_good(OrbifoldSignature(1, {7})));
}

TEST_CASE("signatures normalize and validate") {
    const OrbifoldSignature sig(0, {7, 2, 3});
    CHECK(sig.cone_orders == std::vector<int>{2, 3, 7});
    CHECK(sig == OrbifoldSignature(0, {3, 7, 2}));
    CHECK_THROWS_AS(OrbifoldSignature(0, {1}), std::invalid_argument);
}

TEST_CASE("appending a cone point changes chi by -1 + 1/m") {
    test::Rng rng(7001);
    for (int it = 0; it < 200; ++it) {
        const OrbifoldSignature sig = test::random_signature(rng);
        std::uniform_int_distribution<int> order(2, 40);
        const int m = order(rng);
        auto cones = sig.cone_orders;
        cones.push_back(m);
        const OrbifoldSignature bigger(sig.genus, std::move(cones));
        CHECK(euler_characteristic(bigger) ==
              euler_characteristic(sig) + Rational(-1) + Rational(1, m));
    }
}

TEST_CASE("chi lies in the Euler lattice of its own signature") {
    test::Rng rng(7002);
    for (int it = 0; it < 1000; ++it) {
        const OrbifoldSignature sig = test::random_signature(rng);
        CHECK(euler_lattice(sig).contains(euler_characteristic(sig)));
    }
}

TEST_CASE("the lattice generator divides 1 and every 1/m_k") {
    test::Rng rng(7003);
    for (int it = 0; it < 500; ++it) {
        const OrbifoldSignature sig = test::random_signature(rng);
        const Rational g = euler_lattice(sig).generator;
        CHECK((Rational(1) / g).is_integer());
        for (int m : sig.cone_orders) CHECK((Rational(1, m) / g).is_integer());
    }
}
