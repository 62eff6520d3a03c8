#pragma once

#include <stdexcept>
#include <string>

namespace sderiv {

/// Base class for numeric-domain failures. Batch drivers catch this and
/// record the affected row as skipped-with-reason instead of aborting.
struct NumericDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inversion of a quaternion whose squared norm is below the underflow
/// threshold. In quotient formulas this signals q == conj(q), i.e. the
/// real axis.
struct ZeroDivisor : NumericDomainError {
    using NumericDomainError::NumericDomainError;
};

/// Slice form requested at a (numerically) real point, where the unit
/// imaginary direction is undefined.
struct DegenerateSlice : NumericDomainError {
    using NumericDomainError::NumericDomainError;
};

/// Angular operator evaluated too close to the plane spanned by 1 and k,
/// where the spherical parametrization of the imaginary sphere degenerates.
struct SingularSubplane : NumericDomainError {
    using NumericDomainError::NumericDomainError;
};

/// Power series evaluated at or beyond its declared radius of convergence.
struct OutsideRadius : NumericDomainError {
    using NumericDomainError::NumericDomainError;
};

/// A finite-difference probe point left the function's domain; the caller
/// must shrink the step or skip the point.
struct DomainExit : NumericDomainError {
    using NumericDomainError::NumericDomainError;
};

} // namespace sderiv
