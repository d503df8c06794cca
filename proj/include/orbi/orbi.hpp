#pragma once

// Exact topological invariants of S^1-orbibundles over compact oriented
// 2-orbifolds, and numerical complex-hyperbolic invariants of
// PU(2,1)-representation data.

#include "orbi/rational.hpp"
#include "orbi/orbifold.hpp"
#include "orbi/seifert.hpp"
#include "orbi/covering.hpp"
#include "orbi/complex_hyperbolic.hpp"
#include "orbi/disc.hpp"
#include "orbi/domains.hpp"
#include "orbi/integrate.hpp"
#include "orbi/representation.hpp"
#include "orbi/toledo.hpp"
#include "orbi/json_io.hpp"
