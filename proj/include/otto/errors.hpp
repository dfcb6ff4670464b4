#pragma once

#include <stdexcept>
#include <string>

namespace otto {

/// Base class for every error raised by the engine library.
class OttoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The bath has G <= E: the oscillator would heat without bound.
class NonThermalizing : public OttoError {
public:
    using OttoError::OttoError;
};

/// A requested bath needs ground-space coherence <G|rho_g|G> > 1.
class Infeasible : public OttoError {
public:
    using OttoError::OttoError;
};

class DomainError : public OttoError {
public:
    using OttoError::OttoError;
};

class TruncationError : public OttoError {
public:
    using OttoError::OttoError;
};

/// A collision step produced a negative population (lambda*tau too large).
class NegativityError : public OttoError {
public:
    using OttoError::OttoError;
};

class QuadratureError : public OttoError {
public:
    using OttoError::OttoError;
};

/// The frequency ramp touched omega <= 0.
class ProtocolError : public OttoError {
public:
    using OttoError::OttoError;
};

/// No cycle time in the scanned range yields positive power.
class NoProfitableCycle : public OttoError {
public:
    using OttoError::OttoError;
};

/// Analytic ordering disagrees with the directly computed one. Always a bug.
class InconsistentOrdering : public OttoError {
public:
    using OttoError::OttoError;
};

class ConfigError : public OttoError {
public:
    using OttoError::OttoError;
};

}  // namespace otto
