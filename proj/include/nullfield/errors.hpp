#pragma once

#include <stdexcept>
#include <string>

#include "nullfield/geometry.hpp"

namespace nullfield {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A construction parameter violates its documented range; names the parameter.
class InvalidParameter : public Error {
public:
    InvalidParameter(std::string param, const std::string& msg)
        : Error("invalid parameter '" + param + "': " + msg), param_(std::move(param)) {}
    const std::string& param() const { return param_; }

private:
    std::string param_;
};

/// Evaluation requested outside the field's domain; carries the offending point.
class OutOfDomain : public Error {
public:
    explicit OutOfDomain(Vec2 p)
        : Error("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                ") is outside the evaluation domain"),
          point_(p) {}
    Vec2 point() const { return point_; }

private:
    Vec2 point_;
};

/// Gradient requested on a patch seam; the caller may offset and retry.
class SeamError : public Error {
public:
    explicit SeamError(Vec2 p)
        : Error("field is not differentiable on the patch seam at (" + std::to_string(p.x) +
                ", " + std::to_string(p.y) + ")"),
          point_(p) {}
    Vec2 point() const { return point_; }

private:
    Vec2 point_;
};

/// Overlapping patch regions with no explicit order.
class AmbiguousPatch : public Error {
public:
    explicit AmbiguousPatch(const std::string& msg) : Error(msg) {}
};

/// Map evaluated at a pole or branch point.
class SingularPoint : public Error {
public:
    explicit SingularPoint(cplx z, const std::string& what_part)
        : Error(what_part + " at z = (" + std::to_string(z.real()) + ", " +
                std::to_string(z.imag()) + ")"),
          z_(z) {}
    cplx where() const { return z_; }

private:
    cplx z_;
};

/// Newton inversion failed to reach the residual target.
class InversionFailure : public Error {
public:
    InversionFailure(cplx w, double residual)
        : Error("map inversion did not converge for w = (" + std::to_string(w.real()) + ", " +
                std::to_string(w.imag()) + "), best residual " + std::to_string(residual)),
          residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Iterative solver stagnated; carries the best residual reached.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double residual)
        : Error(msg + " (best residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Stated precondition of an operation does not hold for the given input.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// Invalid option combination passed to a simulation or tool entry point.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Malformed file; carries the byte offset where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t byte_offset)
        : Error(msg + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}
    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace nullfield
