#pragma once

#include <stdexcept>
#include <string>

namespace mixture {

// all library failures derive from this; catch one type at the CLI boundary
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// a component came out NaN/Inf, or an input already was
struct NonFiniteValue : Error {
    explicit NonFiniteValue(const std::string& what) : Error(what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

// frame matrix not invertible (or past the conditioning threshold) at a point
struct SingularFrame : Error {
    explicit SingularFrame(const std::string& what) : Error(what) {}
};

struct SingularMetric : Error {
    explicit SingularMetric(const std::string& what) : Error(what) {}
};

// series did not meet its tail bound within the term budget
struct NonConvergence : Error {
    explicit NonConvergence(const std::string& what) : Error(what) {}
};

// exponential split: vector part is a nonzero null direction, no unit axis exists
struct DegenerateVector : Error {
    explicit DegenerateVector(const std::string& what) : Error(what) {}
};

// symmetrized mirrored product has nonscalar channels; no metric can be read off
struct NonScalarMetric : Error {
    explicit NonScalarMetric(const std::string& what) : Error(what) {}
};

struct QuadratureFailure : Error {
    explicit QuadratureFailure(const std::string& what) : Error(what) {}
};

// a gauge transformation matrix is not invertible at the queried point
struct SingularGauge : Error {
    explicit SingularGauge(const std::string& what) : Error(what) {}
};

// an input tensor required to be antisymmetric is not, beyond tolerance
struct AsymmetryError : Error {
    explicit AsymmetryError(const std::string& what) : Error(what) {}
};

// perturbation magnitudes exceed the linearized-regime guard
struct WeakFieldViolation : Error {
    explicit WeakFieldViolation(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// a suite name outside the published list
struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& what) : Error(what) {}
};

// a demo name outside the published list
struct UnknownDemo : Error {
    explicit UnknownDemo(const std::string& what) : Error(what) {}
};

// a file could not be read or written
struct IOError : Error {
    explicit IOError(const std::string& what) : Error(what) {}
};

} // namespace mixture
