#pragma once

#include <stdexcept>
#include <string>

namespace homveech {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact arithmetic: any operation that would wrap aborts with this.
struct OverflowError : Error {
    using Error::Error;
};

struct NotInOrder : Error {
    using Error::Error;
};

struct OrderMismatch : Error {
    using Error::Error;
};

struct ZeroDivisor : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct ZeroModule : Error {
    using Error::Error;
};

struct DegenerateRank : Error {
    using Error::Error;
};

struct NotAnIdeal : Error {
    using Error::Error;
};

struct ZeroDivisorIdeal : Error {
    using Error::Error;
};

struct FactorizationAmbiguous : Error {
    using Error::Error;
};

struct BoundExceeded : Error {
    using Error::Error;
};

struct NotUnimodular : Error {
    using Error::Error;
};

struct NotUnipotent : Error {
    using Error::Error;
};

struct CorollaryViolated : Error {
    using Error::Error;
};

struct InvalidShape : Error {
    using Error::Error;
};

struct NotApplicable : Error {
    using Error::Error;
};

struct NotOdd : Error {
    using Error::Error;
};

struct NotSymplectic : Error {
    using Error::Error;
};

struct SummandNotPreserved : Error {
    using Error::Error;
};

struct ValidationFailed : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace homveech
