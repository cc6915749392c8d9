#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hetero {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateMinimaError : Error {
    using Error::Error;
};

/// A declared potential failed one of its standing assumptions on a sampled
/// point. Carries the offending point and which assumption broke.
struct AssumptionViolation : Error {
    enum class Which { WellValue, InteriorPositivity, GrowthAtInfinity };

    AssumptionViolation(const std::string& msg, Which which, std::vector<double> point)
        : Error(msg), which(which), point(std::move(point)) {}

    Which which;
    std::vector<double> point;
};

struct EnvelopeDegenerateError : Error {
    using Error::Error;
};

struct ProfileParamError : Error {
    using Error::Error;
};

struct ProfileInvariantViolation : Error {
    ProfileInvariantViolation(const std::string& msg, double x) : Error(msg), x(x) {}
    double x;
};

struct StepCollapse : Error {
    using Error::Error;
};

struct NoTransitionError : Error {
    using Error::Error;
};

struct MisuseError : Error {
    using Error::Error;
};

struct ShootingFailure : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct ConfigParseError : Error {
    ConfigParseError(const std::string& msg, int line) : Error(msg), line(line) {}
    int line;
};

struct UnknownKeyError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace hetero
