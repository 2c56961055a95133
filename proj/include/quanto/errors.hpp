#pragma once

#include <stdexcept>
#include <string>

namespace quanto {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A model, instrument or numerical parameter violates its invariants.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// |rho| >= 1 where the error analysis requires imperfect correlation.
class CorrelationDegenerateError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// Invalid configuration (quadrature settings, config files, CLI flags).
class ConfigError : public Error {
public:
    using Error::Error;
};

class UnsupportedOrderError : public DomainError {
public:
    using DomainError::DomainError;
};

class ArityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A numerical routine failed to produce a result.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Zero proxy variance: Greeks of order >= 1 are undefined.
class DegenerateVarianceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Price outside the no-arbitrage band of the Black formula.
class NoSolutionError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace quanto
