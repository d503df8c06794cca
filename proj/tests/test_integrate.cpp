#include <catch2/catch_amalgamated.hpp>
#include "orbi/orbi.hpp"
TEST_CASE("placeholder test_integrate") { CHECK(true); }
