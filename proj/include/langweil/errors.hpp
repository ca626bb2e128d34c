#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lw {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeCharacteristic : Error {
    explicit NonPrimeCharacteristic(std::uint64_t p)
        : Error("characteristic is not prime: " + std::to_string(p)) {}
};

struct OrderTooLarge : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero field element") {}
};

struct MixedFields : Error {
    MixedFields() : Error("operands belong to different fields") {}
};

struct NoEmbedding : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotHomogeneous : Error {
    using Error::Error;
};

struct WorkCapExceeded : Error {
    std::uint64_t estimated_cost;
    WorkCapExceeded(std::uint64_t estimate, std::uint64_t cap)
        : Error("estimated cost " + std::to_string(estimate) + " exceeds work cap " +
                std::to_string(cap)),
          estimated_cost(estimate) {}
};

struct DegreeCapExceeded : Error {
    using Error::Error;
};

struct OrderCapExceeded : Error {
    using Error::Error;
};

struct IntervalOverlap : Error {
    using Error::Error;
};

struct InsufficientOrder : Error {
    using Error::Error;
};

struct NonUnitLeading : Error {
    using Error::Error;
};

}  // namespace lw
