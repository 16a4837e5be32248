#ifndef QTHERM_QUAD_HPP
#define QTHERM_QUAD_HPP

// Adaptive Gauss-Kronrod quadrature with a fixed absolute-tolerance
// contract. Semi-infinite integrals are mapped to (0,1] by the
// exponential substitution w = a - s ln(u).

#include <functional>

#include "qtherm/errors.hpp"

namespace qtherm {

inline constexpr double kQuadDefaultTol = 1e-8;

/// Integrate f over [a, b]; throws accuracy_error (carrying the estimate)
/// when the error estimate exceeds abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = kQuadDefaultTol);

/// Integrate f over [a, inf) assuming decay on the scale `scale`.
double integrate_semi_infinite(const std::function<double(double)>& f, double a,
                               double scale, double abs_tol = kQuadDefaultTol);

}  // namespace qtherm

#endif
