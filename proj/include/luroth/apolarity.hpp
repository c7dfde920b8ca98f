#pragma once

#include <array>
#include <span>
#include <vector>

#include "luroth/errors.hpp"
#include "luroth/exact/binary.hpp"
#include "luroth/exact/form.hpp"
#include "luroth/exact/matrix.hpp"
#include "luroth/point.hpp"

namespace luroth {

/// Symmetric coefficient matrix A of a quadratic form, f = sum A_ij X_i X_j.
QMatrix symmetric_matrix(const Form& quadric);
Form quadric_from_matrix(const QMatrix& a);

/// Point conic theta = sum A_ij X_i X_j.
class PointConic {
 public:
  explicit PointConic(Form form);
  static PointConic from_matrix(const QMatrix& a) { return PointConic(quadric_from_matrix(a)); }

  const Form& form() const { return form_; }
  const QMatrix& matrix() const { return matrix_; }
  bool nonsingular() const { return sgn(det3(matrix_)) != 0; }
  bool contains(const HomPoint& p) const { return sgn(evaluate(form_, p)) == 0; }

 private:
  Form form_;
  QMatrix matrix_;
};

/// Line conic sum a_ij d_i d_j, stored as a form in the dual operators.
class LineConic {
 public:
  explicit LineConic(Form form);
  const Form& form() const { return form_; }
  const QMatrix& matrix() const { return matrix_; }

 private:
  Form form_;
  QMatrix matrix_;
};

/// Applies the differential operator phi (a form in d0,d1,d2) to the variables
/// [offset, offset+3) of f.
Form apply_operator(const Form& phi, const Form& f, std::size_t offset = 0);

/// Apolarity pairing P_phi(f) for phi of degree d in the dual operators and f
/// of degree n >= d in X0..X2. Throws std::invalid_argument if d > n.
Form apolarity_pair(const Form& phi, const Form& f);

/// First polar sum_i pole_i * dF/dX_{offset+i}; the pole entries are forms in
/// f's variable set, so symbolic poles are allowed.
Form polarize(const Form& f, std::span<const Form> pole, std::size_t offset = 0);

/// Polar of a point with respect to a form in X0..X2 (or X0..X3).
template <std::size_t N>
Form polar(const ProjPoint<N>& xi, const Form& f) {
  if (f.nvars() != N) throw std::invalid_argument("polar: arity mismatch");
  std::vector<Form> pole;
  for (const auto& c : xi.coords()) pole.push_back(Form::constant(N, c));
  return polarize(f, pole);
}

/// Dual conic: the line conic whose matrix is the adjugate of theta's.
LineConic dual_conic(const PointConic& theta);

/// True iff c is apolar to the dual of theta.
bool is_conjugate(const PointConic& c, const PointConic& theta);

/// The cubic through six points of theta that is apolar to theta (unique up
/// to scale). Throws DegenerateInput when the solution space is not a line.
Form apolar_cubic(const PointConic& theta, std::span<const HomPoint> points);

/// Conic through five points; throws DegenerateInput unless unique.
PointConic conic_through(std::span<const HomPoint> points);

/// Rational parametrization t -> q(t) of a nonsingular conic by the lines
/// through a base point p on it. q(1:0) is p; every other point of the
/// conic has a rational parameter.
class ConicParametrization {
 public:
  ConicParametrization(const PointConic& theta, const HomPoint& base);

  /// Three binary quadratics in (t0, t1).
  const std::array<Form, 3>& components() const { return q_; }
  const HomPoint& base() const { return base_; }
  HomPoint point_at(const BinaryRoot& t) const;
  /// Parameter of a point of the conic (the base maps to (1:0)).
  BinaryRoot parameter_of(const HomPoint& p) const;
  /// f(q(t0,t1)) as a binary form.
  Form restrict(const Form& f) const;

 private:
  HomPoint base_;
  std::array<Rational, 3> tangent_dir_;
  std::array<Rational, 3> other_dir_;
  std::array<Form, 3> q_;
};

ConicParametrization parametrize_conic(const PointConic& theta, const HomPoint& p);

}  // namespace luroth
