#pragma once

#include <stdexcept>
#include <string>

namespace conewb {

/// Base of every error raised by the workbench.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Malformed input: zero vector where a ray is needed, non-integral group
/// generator, wrong signature, etc.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The chosen dual point is unusable: outside the dual interior, or it has
/// a nontrivial stabilizer at the requested depth.
class XiRejected : public Error {
public:
    using Error::Error;
};

/// The cone has a nonzero lineality space; the Dirichlet construction needs
/// the quotient workflow instead.
class DegenerateCone : public Error {
public:
    using Error::Error;
};

/// A construction precondition failed (group does not preserve the cone,
/// subspace not invariant, point outside the cone, ...).
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

} // namespace conewb
