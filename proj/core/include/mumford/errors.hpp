#pragma once

#include <stdexcept>
#include <string>

namespace mumford {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial division left a nonzero remainder.
struct NonDivisible : Error {
    using Error::Error;
};

// Bivariate extraction met an x2-degree outside the D(x) pattern.
struct PatternOverflow : Error {
    using Error::Error;
};

struct ShapeViolation : Error {
    using Error::Error;
};

struct PoleAtOne : Error {
    using Error::Error;
};

struct EvenPeriod : Error {
    using Error::Error;
};

struct Unsolvable : Error {
    using Error::Error;
};

struct ZeroB0 : Error {
    using Error::Error;
};

struct DegenerateFiber : Error {
    using Error::Error;
};

struct InconsistentB0Star : Error {
    using Error::Error;
};

struct BlowUp : Error {
    double t;
    explicit BlowUp(double t_, const std::string& what) : Error(what), t(t_) {}
};

struct NonConvergent : Error {
    using Error::Error;
};

struct MultipleRoot : Error {
    using Error::Error;
};

struct LatticePole : Error {
    using Error::Error;
};

struct DivisorHit : Error {
    using Error::Error;
};

struct PoleHit : Error {
    using Error::Error;
};

struct NormalizationMismatch : Error {
    using Error::Error;
};

}  // namespace mumford
