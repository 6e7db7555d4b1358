#pragma once

#include <stdexcept>
#include <string>

namespace dnamul {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad inputs: malformed documents, incompatible matrices, label problems.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A resource cap was hit; the instance is too large for the requested mode.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DimensionMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NonBooleanEntry : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EmptyMatrix : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ChainTooShort : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class OddStrandLength : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class LabelCountMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DuplicateLabel : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// An explicitly supplied strand assignment violates the encoding contract.
class InvalidEncoding : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ShapeMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnknownStrandSegment : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Rejection sampling could not place collision-free strands; the strand
/// length is too small for the vertex count.
class EncodingExhausted : public LimitExceeded {
public:
    using LimitExceeded::LimitExceeded;
};

/// The assembled path set outgrew the configured cap.
class PathExplosion : public LimitExceeded {
public:
    using LimitExceeded::LimitExceeded;
};

/// File system trouble in the CLI layer.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace dnamul
