#include "luroth/config7.hpp"

#include <stdexcept>

namespace luroth {

namespace {

std::vector<Rational> quadric_row(const HomPoint& p) {
  std::vector<Rational> row;
  for (const auto& e : monomials(3, 2)) row.push_back(monomial_value(e, p.span(), 3));
  return row;
}

std::size_t monomial_index(const std::vector<Exponent>& basis, const Exponent& e) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == e) return i;
  throw std::logic_error("monomial_index: monomial not in basis");
}

Exponent sub_exponent(const Exponent& e, std::size_t offset, std::size_t count) {
  Exponent out{};
  for (std::size_t i = 0; i < count; ++i) out[i] = e[offset + i];
  return out;
}

std::vector<HomPoint> without(std::span<const HomPoint> pts, std::size_t skip) {
  std::vector<HomPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i != skip) out.push_back(pts[i]);
  return out;
}

}  // namespace

Config7::Config7(std::array<HomPoint, 7> points) : points_(std::move(points)) {
  distinct_ = true;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j)
      if (points_[i] == points_[j]) distinct_ = false;
  QMatrix veronese(0, 6);
  for (std::size_t i = 0; i < 7; ++i) {
    veronese.append_row(quadric_row(points_[i]));
    six_on_conic_[i] = sgn(veronese_det(without(points_, i))) == 0;
  }
  all_on_conic_ = rank(veronese) < 6;
}

Config7 Config7::from_span(std::span<const HomPoint> points) {
  if (points.size() != 7) throw std::invalid_argument("Config7: expected seven points");
  return Config7({points[0], points[1], points[2], points[3], points[4], points[5], points[6]});
}

bool Config7::any_six_on_conic() const {
  for (bool b : six_on_conic_)
    if (b) return true;
  return false;
}

void Config7::require_distinct() const {
  if (!distinct_) throw DegenerateInput("configuration has coincident points");
}

void Config7::require_not_on_conic() const {
  if (all_on_conic_) throw DegenerateInput("configuration lies on a conic");
}

Config7 Config7::with_point(std::size_t i, const HomPoint& p) const {
  auto pts = points_;
  pts.at(i) = p;
  return Config7(pts);
}

Config7 Config7::swapped(std::size_t i, std::size_t j) const {
  auto pts = points_;
  std::swap(pts.at(i), pts.at(j));
  return Config7(pts);
}

Rational q_invariant(std::span<const HomPoint> p) {
  if (p.size() != 6) throw std::invalid_argument("q_invariant: expected six points");
  auto b = [&](int i, int j, int k) { return bracket(p[i - 1], p[j - 1], p[k - 1]); };
  return b(1, 3, 4) * b(1, 5, 6) * b(2, 3, 5) * b(2, 4, 6) -
         b(1, 3, 5) * b(1, 4, 6) * b(2, 3, 4) * b(2, 5, 6);
}

std::array<Rational, 7> q_values(const Config7& z) {
  std::array<Rational, 7> q;
  for (std::size_t i = 0; i < 7; ++i) q[i] = q_invariant(without(z.points(), i));
  return q;
}

Rational veronese_det(std::span<const HomPoint> six) {
  if (six.size() != 6) throw std::invalid_argument("veronese_det: expected six points");
  QMatrix m(0, 6);
  for (const auto& p : six) m.append_row(quadric_row(p));
  return det_fraction_free(m);
}

CubicNet cubic_net(const Config7& z) {
  const auto basis = monomials(3, 3);
  QMatrix m(7, basis.size());
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t c = 0; c < basis.size(); ++c)
      m(i, c) = monomial_value(basis[c], z[i].span(), 3);
  const auto ker = kernel(m);
  if (ker.size() != 3) {
    throw DegenerateInput("cubic_net: space of cubics through Z has dimension " +
                          std::to_string(ker.size()));
  }
  CubicNet net;
  for (std::size_t j = 0; j < 3; ++j) net.basis[j] = form_from_coefficients(3, 3, ker[j]);
  return net;
}

std::array<Form, 3> HilbertBurchMatrix::minors() const {
  return {linear[1] * quadric[2] - linear[2] * quadric[1],
          linear[2] * quadric[0] - linear[0] * quadric[2],
          linear[0] * quadric[1] - linear[1] * quadric[0]};
}

bool HilbertBurchMatrix::linear_row_independent() const {
  QMatrix m(0, 3);
  for (const auto& l : linear) m.append_row(coefficient_vector(l, 1));
  return rank(m) == 3;
}

std::array<Form, 3> linear_syzygy(const CubicNet& net) {
  QMatrix m(15, 9);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto col = coefficient_vector(Form::variable(3, i) * net.basis[j], 4);
      for (std::size_t r = 0; r < col.size(); ++r) m(r, j * 3 + i) = col[r];
    }
  }
  const auto ker = kernel(m);
  if (ker.size() != 1) {
    throw DegenerateInput("linear_syzygy: expected one linear syzygy, found " +
                          std::to_string(ker.size()));
  }
  std::array<Form, 3> l;
  for (std::size_t j = 0; j < 3; ++j) {
    l[j] = Form::linear(3, std::span<const Rational>(ker[0]).subspan(j * 3, 3));
  }
  return l;
}

HilbertBurchMatrix hilbert_burch(const Config7& z) {
  z.require_not_on_conic();
  const CubicNet net = cubic_net(z);
  HilbertBurchMatrix hb;
  hb.linear = linear_syzygy(net);

  // Solve L x theta = C for the quadric row (18 unknowns, 30 equations).
  const auto quad = monomials(3, 2);
  QMatrix m(30, 18);
  QVector rhs(30);
  // component c = L_a theta_b - L_b theta_a with (a, b) cyclic after c
  for (std::size_t c = 0; c < 3; ++c) {
    const std::size_t a = (c + 1) % 3, b = (c + 2) % 3;
    for (std::size_t q = 0; q < quad.size(); ++q) {
      const Form mono = Form::monomial(3, quad[q], 1);
      const auto plus = coefficient_vector(hb.linear[a] * mono, 3);
      const auto minus = coefficient_vector(hb.linear[b] * mono, 3);
      for (std::size_t r = 0; r < 10; ++r) {
        m(c * 10 + r, b * 6 + q) += plus[r];
        m(c * 10 + r, a * 6 + q) -= minus[r];
      }
    }
    const auto target = coefficient_vector(net.basis[c], 3);
    for (std::size_t r = 0; r < 10; ++r) rhs[c * 10 + r] = target[r];
  }
  const auto sol = solve(m, rhs);
  if (!sol) throw DegenerateInput("hilbert_burch: net basis is not the minor vector of a syzygy matrix");
  for (std::size_t j = 0; j < 3; ++j) {
    hb.quadric[j] = form_from_coefficients(3, 2, std::span<const Rational>(sol->x).subspan(j * 6, 6));
  }
  return hb;
}

namespace {

std::vector<Rational> condition_row(const HomPoint& p, std::size_t j) {
  std::vector<Rational> row(30);
  const auto cubic = monomials(3, 3);
  for (std::size_t m = 0; m < cubic.size(); ++m) row[j * 10 + m] = monomial_value(cubic[m], p.span(), 3);
  return row;
}

QMatrix diagonal_rows() {
  const auto cubic = monomials(3, 3);
  const auto quartic = monomials(3, 4);
  QMatrix m(quartic.size(), 30);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t c = 0; c < cubic.size(); ++c) {
      Exponent e = cubic[c];
      ++e[j];
      m(monomial_index(quartic, e), j * 10 + c) = 1;
    }
  }
  return m;
}

}  // namespace

QMatrix morley_condition_matrix(const Config7& z) {
  QMatrix m = diagonal_rows();
  for (const auto& p : z.points()) {
    const std::size_t k = p.first_nonzero();
    m.append_row(condition_row(p, (k + 1) % 3));
    auto last = condition_row(p, (k + 2) % 3);
    for (auto& v : last) v /= p[k];
    m.append_row(last);
  }
  return m;
}

QMatrix morley_full_condition_matrix(const Config7& z) {
  QMatrix m = diagonal_rows();
  for (const auto& p : z.points())
    for (std::size_t j = 0; j < 3; ++j) m.append_row(condition_row(p, j));
  return m;
}

Form bihomogeneous_from_coefficients(std::span<const Rational> coeffs) {
  if (coeffs.size() != 30) throw std::invalid_argument("expected 30 coefficients");
  const auto cubic = monomials(3, 3);
  Form s(6);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t c = 0; c < cubic.size(); ++c) {
      Exponent e{};
      e[kXiOffset + j] = 1;
      for (std::size_t i = 0; i < 3; ++i) e[kXOffset + i] = cubic[c][i];
      s.add_term(e, coeffs[j * 10 + c]);
    }
  }
  return s;
}

Form morley_S(const Config7& z) {
  z.require_distinct();
  const QMatrix m = morley_condition_matrix(z);
  const QVector minors = signed_maximal_minors(m);
  bool zero = true;
  for (const auto& v : minors) zero = zero && sgn(v) == 0;
  if (zero) throw DegenerateInput("morley_S: condition matrix has rank below 29");
  return bihomogeneous_from_coefficients(minors);
}

Form morley_form(const Form& s) {
  if (s.nvars() != 6) throw std::invalid_argument("morley_form: expected a form in (xi, X)");
  std::vector<Form> pole;
  for (std::size_t j = 0; j < 3; ++j) pole.push_back(Form::variable(6, kXiOffset + j));
  return polarize(s, pole, kXOffset);
}

SkewMatrix6 skew_matrix_of(const Form& m) {
  if (m.nvars() != 6) throw std::invalid_argument("skew_matrix_of: expected a form in (xi, X)");
  const auto quad = monomials(3, 2);
  QMatrix n(6, 6);
  for (const auto& [e, c] : m.terms()) {
    const std::size_t h = monomial_index(quad, sub_exponent(e, kXiOffset, 3));
    const std::size_t k = monomial_index(quad, sub_exponent(e, kXOffset, 3));
    n(h, k) = c;
  }
  if (!n.is_skew()) throw std::logic_error("skew_matrix_of: Morley form is not skew");
  return SkewMatrix6(n);
}

SkewMatrix6 morley_matrix(const Config7& z) { return skew_matrix_of(morley_form(morley_S(z))); }

Rational morley_pfaffian(const Config7& z) { return morley_matrix(z).pfaffian(); }

MorleyData morley_data(const Config7& z) {
  z.require_not_on_conic();
  Form s = morley_S(z);
  Form m = morley_form(s);
  SkewMatrix6 n = skew_matrix_of(m);
  MorleyData d{std::move(s), std::move(m), n, n.pfaffian(), q_values(z), std::nullopt};
  Rational prod = 1;
  for (const auto& q : d.q_values) prod *= q;
  if (sgn(prod) != 0) d.psi = d.f / prod;
  return d;
}

Rational morley_invariant(const Config7& z) {
  const MorleyData d = morley_data(z);
  if (!d.psi) throw DegenerateInput("morley_invariant: six of the points lie on a conic");
  return *d.psi;
}

std::array<SixthPoint, 6> sixth_points(std::span<const HomPoint> six) {
  if (six.size() != 6) throw std::invalid_argument("sixth_points: expected six points");
  if (sgn(veronese_det(six)) == 0) throw DegenerateInput("sixth_points: the six points lie on a conic");
  std::array<SixthPoint, 6> out;
  const auto cubic = monomials(3, 3);
  for (std::size_t i = 0; i < 6; ++i) {
    SixthPoint& sp = out[i];
    const auto others = without(six, i);
    try {
      sp.theta = conic_through(others);
      if (!sp.theta->nonsingular()) throw DegenerateInput("conic through the other five is singular");

      const Form dual = dual_conic(*sp.theta).form();
      QMatrix m(9, cubic.size());
      for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < cubic.size(); ++c) m(r, c) = monomial_value(cubic[c], six[r].span(), 3);
      for (std::size_t c = 0; c < cubic.size(); ++c) {
        const auto lin = coefficient_vector(apply_operator(dual, Form::monomial(3, cubic[c], 1)), 1);
        for (std::size_t r = 0; r < 3; ++r) m(6 + r, c) = lin[r];
      }
      const auto ker = kernel(m);
      if (ker.size() != 1) throw DegenerateInput("apolar cubic through the six points is not unique");
      sp.cubic = form_from_coefficients(3, 3, ker[0]);

      const ConicParametrization par(*sp.theta, others[0]);
      Form sextic = par.restrict(*sp.cubic);
      if (sextic.is_zero()) throw DegenerateInput("cubic contains the conic");
      sextic = divide_by_root(sextic, BinaryRoot{1, 0});
      for (std::size_t r = 1; r < others.size(); ++r) sextic = divide_by_root(sextic, par.parameter_of(others[r]));
      const auto c = binary_coefficients(sextic);
      if (c.size() != 2) throw std::logic_error("residual factor is not linear");
      sp.point = par.point_at(sgn(c[0]) == 0 ? BinaryRoot{1, 0} : BinaryRoot{-c[1] / c[0], 1});
    } catch (const std::exception& e) {
      sp.error = e.what();
    }
  }
  return out;
}

Form jacobian_sextic(const CubicNet& net) {
  std::array<Form, 9> m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t h = 0; h < 3; ++h) m[r * 3 + h] = net.basis[r].derivative(h);
  return det3(m);
}

}  // namespace luroth
