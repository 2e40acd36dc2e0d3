#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

/// Base class for all workbench errors.
class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A convexity/monotonicity precondition was violated (non-convex table, ...).
class InvalidInputError : public Error {
    using Error::Error;
};

/// A 1-D solver could not establish a valid bracket.
class BracketError : public Error {
    using Error::Error;
};

/// The Orlicz-norm supremum is unbounded for the given conjugate family.
class UnboundedNormError : public Error {
    using Error::Error;
};

/// Brute-force norm requested for a support larger than it can handle.
class UnsupportedSizeError : public Error {
    using Error::Error;
};

/// An operation was requested outside the preset family it is defined for.
class UnsupportedError : public Error {
    using Error::Error;
};

/// Sample grid too small for the requested spectral degree.
class AliasingError : public Error {
    using Error::Error;
};

/// psi(k) vanished on the support of a spectrum during psi-differentiation.
class DivisionByZeroError : public Error {
    using Error::Error;
};

/// Quadrature failure (non-finite integrand sample).
class IntegrationError : public Error {
    using Error::Error;
};

/// Configuration / scenario validation failure.
class ConfigError : public Error {
    using Error::Error;
};

}  // namespace orlicz
