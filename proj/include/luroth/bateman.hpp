#pragma once

#include <array>
#include <vector>

#include "luroth/apolarity.hpp"
#include "luroth/config7.hpp"

namespace luroth {

/// A nonsingular conic theta and a nonzero cubic D.
struct BatemanInput {
  BatemanInput(PointConic theta, Form d_cubic);

  PointConic theta;
  Form d_cubic;
};

/// Maximal minors of the matrix of partials [grad theta; grad D]:
/// C = grad theta x grad D.
std::array<Form, 3> bateman_minors(const BatemanInput& inp);

/// S(xi, X) = |grad theta(xi); grad theta(X); grad D(X)| in (xi, X).
Form bateman_S(const BatemanInput& inp);

/// Residual of the operator theta* applied in X to M = polar of S with pole
/// xi. The identity holds when the residual is the zero form.
struct DifferentialIdentity {
  Form m;
  Form residual;
  bool holds() const { return residual.is_zero(); }
};
DifferentialIdentity differential_identity(const BatemanInput& inp);
/// theta* applied to an arbitrary bihomogeneous form M(xi, X) in X.
Form differential_residual(const PointConic& theta, const Form& m);
/// The identity with the ten coefficients of D kept symbolic: forms live in
/// 16 variables (xi, X, then the coefficients in cubic monomial order).
DifferentialIdentity differential_identity_symbolic(const PointConic& theta);

/// The seven common zeros of the minors, when all are rational. Eliminates
/// X2 by a resultant of two minors, then X1 via rational roots on each line
/// through (0,0,1). Throws NotRationallySolvable otherwise.
Config7 bateman_points(const BatemanInput& inp);

/// Image of p under the Geiser involution: the intersection of the polar
/// lines of p with respect to theta and D. Throws DegenerateInput for p in Z.
HomPoint geiser_image(const BatemanInput& inp, const HomPoint& p);

/// Quartic of the points Q whose polar line for theta touches their polar
/// conic for D: l_Q^T adj(C_Q) l_Q.
Form branch_quartic(const BatemanInput& inp);

/// Discriminant of the polar conic of q (for D) restricted to the polar line
/// of q (for theta); zero exactly when the line is tangent.
Rational polar_tangency_discriminant(const BatemanInput& inp, const HomPoint& q);

}  // namespace luroth
