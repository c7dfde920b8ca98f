#include "luroth/apolarity.hpp"

#include <stdexcept>

namespace luroth {

QMatrix symmetric_matrix(const Form& quadric) {
  const std::size_t n = quadric.nvars();
  if (!quadric.is_zero() && (!quadric.is_homogeneous() || quadric.degree() != 2)) {
    throw std::invalid_argument("symmetric_matrix: expected a quadratic form");
  }
  QMatrix a(n, n);
  for (const auto& [e, c] : quadric.terms()) {
    std::size_t i = n, j = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (e[v] == 2) i = j = v;
      if (e[v] == 1) (i == n ? i : j) = v;
    }
    if (i == j) {
      a(i, i) = c;
    } else {
      a(i, j) = c / 2;
      a(j, i) = c / 2;
    }
  }
  return a;
}

Form quadric_from_matrix(const QMatrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("quadric_from_matrix: not symmetric");
  const std::size_t n = a.rows();
  Form f(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Exponent e{};
      ++e[i];
      ++e[j];
      f.add_term(e, i == j ? a(i, i) : Rational(2 * a(i, j)));
    }
  }
  return f;
}

PointConic::PointConic(Form form) : form_(std::move(form)) {
  if (form_.nvars() != 3) throw std::invalid_argument("PointConic: expected 3 variables");
  matrix_ = symmetric_matrix(form_);
}

LineConic::LineConic(Form form) : form_(std::move(form)) {
  if (form_.nvars() != 3) throw std::invalid_argument("LineConic: expected 3 variables");
  matrix_ = symmetric_matrix(form_);
}

Form apply_operator(const Form& phi, const Form& f, std::size_t offset) {
  if (phi.nvars() != 3 || offset + 3 > f.nvars()) {
    throw std::invalid_argument("apply_operator: arity mismatch");
  }
  Form out(f.nvars());
  for (const auto& [e, a] : phi.terms()) {
    Form g = f;
    for (std::size_t i = 0; i < 3 && !g.is_zero(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) g = g.derivative(offset + i);
    }
    out += g * a;
  }
  return out;
}

Form apolarity_pair(const Form& phi, const Form& f) {
  if (phi.nvars() != 3 || f.nvars() != 3) {
    throw std::invalid_argument("apolarity_pair: forms must be in 3 variables");
  }
  if (!phi.is_homogeneous() || !f.is_homogeneous()) {
    throw std::invalid_argument("apolarity_pair: forms must be homogeneous");
  }
  if (!phi.is_zero() && !f.is_zero() && phi.degree() > f.degree()) {
    throw std::invalid_argument("apolarity_pair: operator degree exceeds form degree");
  }
  return apply_operator(phi, f, 0);
}

Form polarize(const Form& f, std::span<const Form> pole, std::size_t offset) {
  Form out(f.nvars());
  for (std::size_t i = 0; i < pole.size(); ++i) out += pole[i] * f.derivative(offset + i);
  return out;
}

LineConic dual_conic(const PointConic& theta) {
  if (!theta.nonsingular()) throw DegenerateInput("dual_conic: singular conic");
  return LineConic(quadric_from_matrix(adjugate3(theta.matrix())));
}

bool is_conjugate(const PointConic& c, const PointConic& theta) {
  return apolarity_pair(dual_conic(theta).form(), c.form()).is_zero();
}

Form apolar_cubic(const PointConic& theta, std::span<const HomPoint> points) {
  if (points.size() != 6) throw std::invalid_argument("apolar_cubic: expected six points");
  for (const auto& p : points) {
    if (!theta.contains(p)) {
      throw std::invalid_argument("apolar_cubic: point " + p.to_string() + " is not on the conic");
    }
  }
  const Form dual = dual_conic(theta).form();
  const auto basis = monomials(3, 3);
  QMatrix m(9, basis.size());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t c = 0; c < basis.size(); ++c)
      m(i, c) = monomial_value(basis[c], points[i].span(), 3);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto lin = apply_operator(dual, Form::monomial(3, basis[c], 1));
    const auto coeffs = coefficient_vector(lin, 1);
    for (std::size_t r = 0; r < 3; ++r) m(6 + r, c) = coeffs[r];
  }
  const auto ker = kernel(m);
  if (ker.size() != 1) {
    throw DegenerateInput("apolar_cubic: solution space has dimension " +
                          std::to_string(ker.size()));
  }
  return form_from_coefficients(3, 3, ker.front());
}

PointConic conic_through(std::span<const HomPoint> points) {
  const auto basis = monomials(3, 2);
  QMatrix m(points.size(), basis.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t c = 0; c < basis.size(); ++c)
      m(i, c) = monomial_value(basis[c], points[i].span(), 3);
  const auto ker = kernel(m);
  if (ker.size() != 1) throw DegenerateInput("conic_through: conic is not unique");
  return PointConic(form_from_coefficients(3, 2, ker.front()));
}

namespace {

Rational bilinear(const QMatrix& a, std::span<const Rational> x, std::span<const Rational> y) {
  Rational s = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s += x[i] * a(i, j) * y[j];
  return s;
}

}  // namespace

ConicParametrization::ConicParametrization(const PointConic& theta, const HomPoint& base)
    : base_(base) {
  if (!theta.nonsingular()) throw DegenerateInput("parametrize_conic: singular conic");
  if (!theta.contains(base)) {
    throw std::invalid_argument("parametrize_conic: base point is not on the conic");
  }
  const QMatrix& a = theta.matrix();
  const QVector ap = a * base.span();
  // Tangent direction: kernel of the polar row, not proportional to the base.
  const auto tangent = kernel(QMatrix(1, 3, ap));
  bool found = false;
  for (const auto& v : tangent) {
    if (!(HomPoint(v[0], v[1], v[2]) == base)) {
      tangent_dir_ = {v[0], v[1], v[2]};
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("parametrize_conic: no tangent direction");
  std::size_t i = 0;
  while (sgn(ap[i]) == 0) ++i;
  other_dir_ = {0, 0, 0};
  other_dir_[i] = 1;

  // d(t) = t0 u + t1 w, q(t) = theta(d) p - 2 B(p, d) d
  std::array<Form, 3> d;
  for (std::size_t k = 0; k < 3; ++k) {
    d[k] = Form::variable(2, 0) * tangent_dir_[k] + Form::variable(2, 1) * other_dir_[k];
  }
  Form theta_d(2);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) theta_d += d[r] * d[c] * a(r, c);
  const Form bpd = Form::variable(2, 1) * bilinear(a, base.span(), other_dir_);
  for (std::size_t k = 0; k < 3; ++k) q_[k] = theta_d * base[k] - bpd * d[k] * Rational(2);
}

HomPoint ConicParametrization::point_at(const BinaryRoot& t) const {
  const std::array<Rational, 2> tv{t.t0, t.t1};
  return HomPoint(std::array<Rational, 3>{q_[0].evaluate(tv), q_[1].evaluate(tv),
                                          q_[2].evaluate(tv)});
}

BinaryRoot ConicParametrization::parameter_of(const HomPoint& p) const {
  if (p == base_) return {1, 0};
  QMatrix basis(3, 3);
  for (std::size_t r = 0; r < 3; ++r) {
    basis(r, 0) = base_[r];
    basis(r, 1) = tangent_dir_[r];
    basis(r, 2) = other_dir_[r];
  }
  const auto sol = solve(basis, p.span());
  if (!sol || !sol->unique) throw std::logic_error("parameter_of: basis is singular");
  const Rational& t0 = sol->x[1];
  const Rational& t1 = sol->x[2];
  if (sgn(t1) == 0) return {1, 0};
  return {t0 / t1, 1};
}

Form ConicParametrization::restrict(const Form& f) const { return f.substitute(q_); }

ConicParametrization parametrize_conic(const PointConic& theta, const HomPoint& p) {
  return ConicParametrization(theta, p);
}

}  // namespace luroth
