#include "luroth/bateman.hpp"

#include <stdexcept>

#include "luroth/exact/univariate.hpp"

namespace luroth {

BatemanInput::BatemanInput(PointConic theta_in, Form d_in)
    : theta(std::move(theta_in)), d_cubic(std::move(d_in)) {
  if (!theta.nonsingular()) throw DegenerateInput("BatemanInput: singular conic");
  if (d_cubic.nvars() != 3 || d_cubic.is_zero() || !d_cubic.is_homogeneous() ||
      d_cubic.degree() != 3) {
    throw std::invalid_argument("BatemanInput: D must be a nonzero ternary cubic");
  }
}

namespace {

std::array<Form, 3> gradient(const Form& f, std::size_t offset) {
  return {f.derivative(offset), f.derivative(offset + 1), f.derivative(offset + 2)};
}

// |grad theta(xi); grad theta(X); grad D(X)| for forms embedded in `nvars`
// variables with xi at 0 and X at 3.
Form s_determinant(const Form& theta, const Form& d, std::size_t nvars) {
  const auto gx = gradient(theta.embed(nvars, kXiOffset), kXiOffset);
  const auto gX = gradient(theta.embed(nvars, kXOffset), kXOffset);
  const auto gd = gradient(d, kXOffset);
  return det3({gx[0], gx[1], gx[2], gX[0], gX[1], gX[2], gd[0], gd[1], gd[2]});
}

Form morley_of(const Form& s) {
  std::vector<Form> pole;
  for (std::size_t j = 0; j < 3; ++j) pole.push_back(Form::variable(s.nvars(), kXiOffset + j));
  return polarize(s, pole, kXOffset);
}

// Determinant of the Sylvester matrix of a and b with formal degrees da, db.
Rational sylvester_resultant(const UPoly& a, std::size_t da, const UPoly& b, std::size_t db) {
  const std::size_t n = da + db;
  if (n == 0) return 1;
  auto coeff = [](const UPoly& p, std::size_t k) { return k < p.size() ? p[k] : Rational(0); };
  QMatrix m(n, n);
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t k = 0; k <= da; ++k) m(r, r + k) = coeff(a, da - k);
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t k = 0; k <= db; ++k) m(db + r, r + k) = coeff(b, db - k);
  return det_fraction_free(m);
}

std::size_t degree_in(const Form& f, std::size_t var) {
  std::size_t d = 0;
  for (const auto& [e, c] : f.terms()) d = std::max<std::size_t>(d, e[var]);
  return d;
}

// f(t, 1, X2) as a polynomial in X2.
UPoly on_slope(const Form& f, const Rational& t) {
  UPoly u(degree_in(f, 2) + 1);
  for (const auto& [e, c] : f.terms()) u[e[2]] += c * power(t, e[0]);
  upoly::trim(u);
  return u;
}

// Resultant in X2 of f(t, 1, X2) and g(t, 1, X2) as a polynomial in t.
UPoly slope_resultant(const Form& f, const Form& g) {
  const std::size_t df = degree_in(f, 2), dg = degree_in(g, 2);
  const std::size_t samples = 3 * (df + dg) + 2;
  std::vector<Rational> ts, values;
  for (std::size_t i = 0; i < samples; ++i) {
    const Rational t(static_cast<long>(i));
    ts.push_back(t);
    values.push_back(sylvester_resultant(on_slope(f, t), df, on_slope(g, t), dg));
  }
  return upoly::interpolate(ts, values);
}

void add_point(std::vector<HomPoint>& pts, const HomPoint& p) {
  for (const auto& q : pts)
    if (q == p) return;
  pts.push_back(p.canonical());
}

}  // namespace

std::array<Form, 3> bateman_minors(const BatemanInput& inp) {
  const auto gt = gradient(inp.theta.form(), 0);
  const auto gd = gradient(inp.d_cubic, 0);
  return {gt[1] * gd[2] - gt[2] * gd[1], gt[2] * gd[0] - gt[0] * gd[2],
          gt[0] * gd[1] - gt[1] * gd[0]};
}

Form bateman_S(const BatemanInput& inp) {
  Form s = s_determinant(inp.theta.form(), inp.d_cubic.embed(6, kXOffset), 6);
  if (s.is_zero()) throw DegenerateInput("bateman_S: determinant vanishes identically");
  return s;
}

Form differential_residual(const PointConic& theta, const Form& m) {
  return apply_operator(dual_conic(theta).form(), m, kXOffset);
}

DifferentialIdentity differential_identity(const BatemanInput& inp) {
  DifferentialIdentity out;
  out.m = morley_of(bateman_S(inp));
  out.residual = differential_residual(inp.theta, out.m);
  return out;
}

DifferentialIdentity differential_identity_symbolic(const PointConic& theta) {
  if (!theta.nonsingular()) throw DegenerateInput("differential_identity: singular conic");
  constexpr std::size_t kVars = 16;
  const auto cubic = monomials(3, 3);
  Form d(kVars);
  for (std::size_t m = 0; m < cubic.size(); ++m) {
    Exponent e{};
    for (std::size_t i = 0; i < 3; ++i) e[kXOffset + i] = cubic[m][i];
    e[6 + m] = 1;
    d.add_term(e, 1);
  }
  DifferentialIdentity out;
  out.m = morley_of(s_determinant(theta.form(), d, kVars));
  out.residual = differential_residual(theta, out.m);
  return out;
}

Config7 bateman_points(const BatemanInput& inp) {
  const auto c = bateman_minors(inp);
  const std::array<std::pair<Form, Form>, 4> pairs{{{c[0], c[1]},
                                                    {c[0], c[2]},
                                                    {c[1], c[2]},
                                                    {c[0] + c[1], c[1] + c[2]}}};
  UPoly res;
  for (const auto& [f, g] : pairs) {
    res = slope_resultant(f, g);
    if (!res.empty()) break;
  }
  if (res.empty()) throw DegenerateInput("bateman_points: minors share a common component");

  // Lines X0 = t X1 for each rational root t, and the line X1 = 0.
  std::vector<std::array<Form, 3>> lines;
  const Form s = Form::variable(2, 0), u = Form::variable(2, 1);
  for (const auto& t : upoly::rational_roots(res)) lines.push_back({s * t, s, u});
  lines.push_back({s, Form(2), u});

  std::vector<HomPoint> pts;
  for (const auto& line : lines) {
    Form g(2);
    for (const auto& minor : c) g = binary_gcd(g, minor.substitute(line));
    if (g.is_zero()) throw DegenerateInput("bateman_points: a line lies in every minor");
    if (g.degree() == 0) continue;
    for (const auto& r : binary_rational_roots(g)) {
      const std::array<Rational, 2> tv{r.t0, r.t1};
      add_point(pts, HomPoint(std::array<Rational, 3>{line[0].evaluate(tv), line[1].evaluate(tv),
                                                      line[2].evaluate(tv)}));
    }
  }
  if (pts.size() != 7) {
    throw NotRationallySolvable("bateman_points: found " + std::to_string(pts.size()) +
                                " rational common zeros instead of 7");
  }
  for (const auto& p : pts)
    for (const auto& minor : c)
      if (sgn(evaluate(minor, p)) != 0) throw std::logic_error("bateman_points: minor does not vanish");
  return Config7::from_span(pts);
}

HomPoint geiser_image(const BatemanInput& inp, const HomPoint& p) {
  const auto gt = gradient(inp.theta.form(), 0);
  const auto gd = gradient(inp.d_cubic, 0);
  std::array<Rational, 3> lt, ld;
  for (std::size_t i = 0; i < 3; ++i) {
    lt[i] = evaluate(gt[i], p);
    ld[i] = evaluate(gd[i], p);
  }
  const auto q = cross(lt, ld);
  if (sgn(q[0]) == 0 && sgn(q[1]) == 0 && sgn(q[2]) == 0) {
    throw DegenerateInput("geiser_image: " + p.to_string() + " is a base point");
  }
  Rational on_theta = 0, on_d = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    on_theta += lt[i] * q[i];
    on_d += ld[i] * q[i];
  }
  if (sgn(on_theta) != 0 || sgn(on_d) != 0) throw std::logic_error("geiser_image: not on both polar lines");
  return HomPoint(q);
}

Form branch_quartic(const BatemanInput& inp) {
  const auto l = gradient(inp.theta.form(), 0);
  std::array<Form, 9> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c[i * 3 + j] = inp.d_cubic.derivative(i).derivative(j) * Rational(1, 2);
  auto at = [&](std::size_t i, std::size_t j) -> const Form& { return c[(i % 3) * 3 + j % 3]; };
  Form b(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // adj(C)_ij is the cofactor of C_ji
      const Form adj = at(j + 1, i + 1) * at(j + 2, i + 2) - at(j + 1, i + 2) * at(j + 2, i + 1);
      b += l[i] * adj * l[j];
    }
  }
  if (b.is_zero()) throw DegenerateInput("branch_quartic: vanishes identically");
  return b;
}

Rational polar_tangency_discriminant(const BatemanInput& inp, const HomPoint& q) {
  const Form line = polar(q, inp.theta.form());
  const Form conic = polar(q, inp.d_cubic);
  const auto dirs = kernel(QMatrix(1, 3, coefficient_vector(line, 1)));
  if (dirs.size() != 2) throw DegenerateInput("polar line of q vanishes");
  std::array<Form, 3> param;
  for (std::size_t k = 0; k < 3; ++k) {
    param[k] = Form::variable(2, 0) * dirs[0][k] + Form::variable(2, 1) * dirs[1][k];
  }
  auto c = binary_coefficients(conic.substitute(param));
  c.resize(3);
  return c[1] * c[1] - 4 * c[0] * c[2];
}

}  // namespace luroth
