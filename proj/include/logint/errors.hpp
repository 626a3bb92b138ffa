#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logint {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the real domain of a function (log of a nonpositive
// number, a pole of psi, li2 above 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class PrecisionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Quadrature or series truncation could not certify the requested digits.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, long achieved_digits)
        : Error(what), achieved_(achieved_digits) {}
    long achieved_digits() const { return achieved_; }

private:
    long achieved_;
};

// The two alternating-series accelerators disagree. Both values are kept as
// decimal strings so the report can show them.
class AccelerationMismatch : public Error {
public:
    AccelerationMismatch(const std::string& primary, const std::string& validator)
        : Error("acceleration methods disagree: cvz=" + primary + " euler=" + validator),
          primary_(primary), validator_(validator) {}
    const std::string& primary() const { return primary_; }
    const std::string& validator() const { return validator_; }

private:
    std::string primary_;
    std::string validator_;
};

class RegistryError : public Error {
public:
    RegistryError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace logint
