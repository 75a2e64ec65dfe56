#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sympchar {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad modulus, degree out of range, or inversion of zero.
class FieldError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// A domain, product, or group enumeration would exceed the configured limit.
class BoundExceeded : public Error {
public:
    BoundExceeded(const std::string& what, std::uint64_t needed, std::uint64_t limit)
        : Error(what + " (needed " + std::to_string(needed) + ", limit " +
                std::to_string(limit) + ")"),
          needed_(needed), limit_(limit) {}
    std::uint64_t needed() const { return needed_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t needed_, limit_;
};

/// Generator closure did not reach the claimed group order.
class GenerationShortfall : public Error {
public:
    GenerationShortfall(const std::string& label, std::uint64_t achieved, std::uint64_t claimed)
        : Error("generator closure for " + label + " reached " + std::to_string(achieved) +
                " elements, claimed order is " + std::to_string(claimed)),
          achieved_(achieved), claimed_(claimed) {}
    std::uint64_t achieved() const { return achieved_; }
    std::uint64_t claimed() const { return claimed_; }

private:
    std::uint64_t achieved_, claimed_;
};

class NotExtendable : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// Raised where a computation is only meaningful for m >= 2.
class DegenerateCase : public Error {
public:
    using Error::Error;
};

/// The eigenvalue-multiplicity computation did not come out in exact integers.
class NonIntegralMultiplicity : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace sympchar
