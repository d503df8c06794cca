#pragma once

#include <stdexcept>
#include <string>

namespace orbi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact / combinatorial layer
struct ZeroDenominator : Error { using Error::Error; };
struct NonIntegralGenus : Error { using Error::Error; };
struct ZeroEulerCharacteristic : Error { using Error::Error; };

// complex hyperbolic layer
struct ZeroVector : Error { using Error::Error; };
struct IsotropicBase : Error { using Error::Error; };
struct BaseMismatch : Error { using Error::Error; };
struct DegeneratePlane : Error { using Error::Error; };
struct NonNegativePoint : Error { using Error::Error; };
struct NotInSU21 : Error { using Error::Error; };
struct CoincidentPoints : Error { using Error::Error; };

// quadrature / toledo layer
struct NotHyperbolic : Error { using Error::Error; };
struct IncompatibleRepresentation : Error { using Error::Error; };
struct DerivativeBreakdown : Error { using Error::Error; };

struct NoConvergence : Error {
    double last_estimate;
    double previous_estimate;
    NoConvergence(const std::string& msg, double last, double prev)
        : Error(msg), last_estimate(last), previous_estimate(prev) {}
};

} // namespace orbi
