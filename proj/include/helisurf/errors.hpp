#pragma once

#include <stdexcept>

namespace helisurf {

/// Base for geometric precondition failures.
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation outside a profile's stated arc-length domain.
struct DomainError : GeometryError {
    using GeometryError::GeometryError;
};

/// Immersion degeneracy: EG - F^2 at or below the configured threshold.
struct RegularityError : GeometryError {
    using GeometryError::GeometryError;
};

/// Halfspace condition <p,v> > eps violated.
struct HalfspaceError : GeometryError {
    using GeometryError::GeometryError;
};

}  // namespace helisurf
