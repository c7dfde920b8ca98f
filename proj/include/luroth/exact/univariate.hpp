#pragma once

#include <vector>

#include "luroth/exact/rational.hpp"

namespace luroth {

/// Dense univariate polynomial over Rational, ascending coefficients, no
/// trailing zeros (the zero polynomial is the empty vector).
using UPoly = std::vector<Rational>;

namespace upoly {

void trim(UPoly& p);
int degree(const UPoly& p);
Rational evaluate(const UPoly& p, const Rational& x);
UPoly derivative(const UPoly& p);
UPoly multiply(const UPoly& a, const UPoly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic greatest common divisor (empty when both are zero).
UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);
/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Distinct rational roots in increasing order, found exactly without
/// factoring any coefficient.
std::vector<Rational> rational_roots(const UPoly& p);

}  // namespace upoly

}  // namespace luroth
