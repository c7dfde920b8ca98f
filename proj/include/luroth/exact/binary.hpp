#pragma once

#include <optional>
#include <vector>

#include "luroth/exact/form.hpp"

namespace luroth {

/// Projective root (t0 : t1) of a binary form, normalized so that the last
/// nonzero coordinate is 1.
struct BinaryRoot {
  Rational t0;
  Rational t1;
  friend bool operator==(const BinaryRoot&, const BinaryRoot&) = default;
};

/// Coefficients c[k] of t0^(d-k) t1^k for a homogeneous binary form of degree d.
std::vector<Rational> binary_coefficients(const Form& b);
Form binary_from_coefficients(const std::vector<Rational>& c);

/// Distinct rational projective roots.
std::vector<BinaryRoot> binary_rational_roots(const Form& b);

/// Exact quotient of b by the linear form vanishing at `root`; throws
/// std::domain_error when the division leaves a remainder.
Form divide_by_root(const Form& b, const BinaryRoot& root);

/// Binary form q with q*q == b, when b is the square of a binary form with
/// rational coefficients. b must be homogeneous of even degree.
std::optional<Form> binary_square_root(const Form& b);

/// Square test for binary quartics.
std::optional<Form> binary_square_test(const Form& b);

/// Monic-up-to-scale gcd of two binary forms (zero if both zero).
Form binary_gcd(const Form& a, const Form& b);

}  // namespace luroth
