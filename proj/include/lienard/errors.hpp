#pragma once

#include <stdexcept>
#include <string>

namespace lienard {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct StepLimitExceeded : Error {
    explicit StepLimitExceeded(const std::string& msg) : Error(msg) {}
};

struct NonFiniteState : Error {
    explicit NonFiniteState(const std::string& msg) : Error(msg) {}
};

struct DepthExceeded : Error {
    explicit DepthExceeded(const std::string& msg) : Error(msg) {}
};

struct DegreeUnsupported : Error {
    explicit DegreeUnsupported(const std::string& msg) : Error(msg) {}
};

struct DegreeOverflow : Error {
    explicit DegreeOverflow(const std::string& msg) : Error(msg) {}
};

struct MissingDerivatives : Error {
    explicit MissingDerivatives(const std::string& msg) : Error(msg) {}
};

struct SingularGauge : Error {
    explicit SingularGauge(const std::string& msg) : Error(msg) {}
};

struct VanishingVelocity : Error {
    explicit VanishingVelocity(const std::string& msg) : Error(msg) {}
};

struct NearPole : Error {
    explicit NearPole(const std::string& msg) : Error(msg) {}
};

struct VanishingOmega : Error {
    explicit VanishingOmega(const std::string& msg) : Error(msg) {}
};

struct NotARoot : Error {
    explicit NotARoot(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace lienard
