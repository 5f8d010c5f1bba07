#pragma once

#include <stdexcept>
#include <string>

namespace rieszlab {

/// Input matrix failed the positive-definiteness pivot test.
class NotPositiveDefinite : public std::runtime_error {
public:
    explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

/// Operation requested for an algebra without full matrix support (beta = 8).
class UnsupportedAlgebra : public std::runtime_error {
public:
    explicit UnsupportedAlgebra(const std::string& what) : std::runtime_error(what) {}
};

/// Parameter outside the existence/admissibility region of a formula.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

class ShapeMismatch : public std::invalid_argument {
public:
    explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Ordered-vector input (singular values, eigenvalues) not strictly decreasing.
class UnorderedInput : public std::invalid_argument {
public:
    explicit UnorderedInput(const std::string& what) : std::invalid_argument(what) {}
};

class WeightTooLarge : public std::invalid_argument {
public:
    explicit WeightTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

class TooManyParts : public std::invalid_argument {
public:
    explicit TooManyParts(const std::string& what) : std::invalid_argument(what) {}
};

class SingularTransform : public std::invalid_argument {
public:
    explicit SingularTransform(const std::string& what) : std::invalid_argument(what) {}
};

/// Adaptive quadrature exceeded its node budget before reaching tolerance.
class IntegrationFailure : public std::runtime_error {
public:
    explicit IntegrationFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rieszlab
