#pragma once

#include <stdexcept>
#include <string>

namespace euclid {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands belong to algebras of different dimension, or an argument has
/// the wrong dimension for the requested operation.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A matrix handed to element_from_matrix does not have the negacyclic
/// structure (each row the previous one shifted right, sign-flipped on
/// wraparound).
class NotNegacyclic : public Error {
public:
    using Error::Error;
};

/// A spectrum is not closed under complex conjugation, so it cannot come
/// from a real coefficient vector.
class NotConjugateSymmetric : public Error {
public:
    using Error::Error;
};

/// The element is (numerically) a zero divisor; the requested operation
/// needs an invertible element.
class ZeroDivisorError : public Error {
public:
    using Error::Error;
};

/// A zero divisor was required but the element is invertible.
class NotAZeroDivisor : public Error {
public:
    using Error::Error;
};

/// Operation requires an even dimension.
class OddDimension : public Error {
public:
    using Error::Error;
};

/// Operation requires an odd dimension.
class EvenDimension : public Error {
public:
    using Error::Error;
};

/// A vector field produced a non-finite value or threw while being probed.
class EvaluationFailure : public Error {
public:
    using Error::Error;
};

/// Every Monte Carlo sample fell below the zero-divisor threshold.
class AllSamplesClipped : public Error {
public:
    using Error::Error;
};

}  // namespace euclid
