#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddsa {

// Base class for all errors raised by the exact-algebra layers.
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Cyclotomic operands live in fields of different order n.
class OrderMismatch : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

// KScalar operands disagree on the number of kappa orbit parameters.
class ArityMismatch : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

// Clifford operands were built under different signature contexts.
class SignatureMismatch : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

// Dihedral order m < 3.
class InvalidOrder : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

// Polynomial division by a linear form left a nonzero remainder.
class NonZeroRemainder : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

class UnknownRoot : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

class DegenerateIndices : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

// A kappa parameter required by a specialization was not supplied.
class UnboundParameter : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

class NotDegreePreserving : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

class NotSimultaneouslyDiagonalizable : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

class LadderViolation : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

// Lexical and syntactic errors carry the byte offset of the offence.
class ParseError : public AlgebraError {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : AlgebraError(msg + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnbalancedBracket : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace ddsa
