#include <gtest/gtest.h>

#include "luroth/bateman.hpp"
#include "luroth/errors.hpp"
#include "luroth/pentalateral.hpp"
#include "luroth/sampler.hpp"
#include "oracles.hpp"

using namespace luroth;

namespace {

Form x(std::size_t i) { return Form::variable(3, i); }

BatemanInput sphere_xyz() { return BatemanInput(PointConic(x(0) * x(0) + x(1) * x(1) + x(2) * x(2)), x(0) * x(1) * x(2)); }

BatemanInput diagonal(long m, long n) {
  return BatemanInput(PointConic(x(0) * x(0) + x(1) * x(1) * Rational(m * m) + x(2) * x(2) * Rational(n * n)),
                      x(0) * x(1) * x(2));
}

bool same_points(const Config7& z, const std::vector<HomPoint>& expected) {
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& p : z.points()) found = found || p == e;
    if (!found) return false;
  }
  return true;
}

const std::vector<HomPoint> kBatemanPoints{HomPoint(1, 0, 0),  HomPoint(0, 1, 0),  HomPoint(0, 0, 1), HomPoint(1, 1, 1),
                                           HomPoint(1, -1, 1), HomPoint(1, 1, -1), HomPoint(-1, 1, 1)};

// Binary form f(t0 * p + t1 * q).
Form on_line(const Form& f, std::span<const Rational> p, std::span<const Rational> q) {
  std::vector<Form> images;
  for (std::size_t i = 0; i < 3; ++i) images.push_back(Form::variable(2, 0) * p[i] + Form::variable(2, 1) * q[i]);
  return f.substitute(images);
}

// Two points spanning a line.
std::array<std::array<Rational, 3>, 2> points_of(const LineCoeffs& l) {
  std::array<std::array<Rational, 3>, 3> candidates{};
  for (std::size_t i = 0; i < 3; ++i) {
    std::array<Rational, 3> e{0, 0, 0};
    e[i] = 1;
    candidates[i] = cross(l, e);
  }
  std::array<std::array<Rational, 3>, 2> out{};
  std::size_t n = 0;
  for (const auto& c : candidates) {
    if (n == 2) break;
    if (c == std::array<Rational, 3>{0, 0, 0}) continue;
    if (n == 1 && cross(out[0], c) == std::array<Rational, 3>{0, 0, 0}) continue;
    out[n++] = c;
  }
  return out;
}

Rational quadratic_discriminant(const Form& b) {
  const auto c = binary_coefficients(b);
  return c[1] * c[1] - 4 * c[0] * c[2];
}

}  // namespace

TEST(BatemanS, MinorsOfTheStandardPair) {
  const auto minors = bateman_minors(sphere_xyz());
  const std::array<Form, 3> want{x(0) * (x(1) * x(1) - x(2) * x(2)), x(1) * (x(2) * x(2) - x(0) * x(0)),
                                 x(2) * (x(0) * x(0) - x(1) * x(1))};
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(minors[i], want[i] * Rational(2));
}

TEST(BatemanS, VanishesOnThePointsAndDiagonal) {
  const Form s = bateman_S(sphere_xyz());
  Sampler smp(51);
  for (int k = 0; k < 3; ++k) {
    const HomPoint xi = smp.point();
    for (const auto& p : kBatemanPoints) {
      std::vector<Rational> v(xi.coords().begin(), xi.coords().end());
      v.insert(v.end(), p.coords().begin(), p.coords().end());
      EXPECT_EQ(s.evaluate(v), 0);
    }
  }
  std::vector<Form> diag;
  for (int r = 0; r < 2; ++r)
    for (std::size_t i = 0; i < 3; ++i) diag.push_back(x(i));
  EXPECT_TRUE(s.substitute(diag).is_zero());
}

TEST(BatemanS, ProportionalToMorleyS) {
  const Form s = bateman_S(sphere_xyz());
  const Config7 z = Config7::from_span(kBatemanPoints);
  EXPECT_TRUE(oracle::proportional(s, morley_S(z)));
  Sampler smp(52);
  for (int i = 0; i < 2; ++i) {
    const long m = smp.integer(2, 6), n = smp.integer(2, 6);
    const BatemanInput inp = diagonal(m, n);
    EXPECT_TRUE(oracle::proportional(bateman_S(inp), morley_S(bateman_points(inp))));
  }
}

TEST(DifferentialIdentity, SymbolicCubicOnTheStandardConic) {
  const PointConic theta(x(0) * x(0) + x(1) * x(2) * Rational(2));
  const auto id = differential_identity_symbolic(theta);
  EXPECT_TRUE(id.holds()) << id.residual.to_string();
  // The X0^2 and X1 X2 coefficients of M form the block (X1 X2 - X0^2) * c.
  auto coeff_of = [&](std::initializer_list<unsigned> xpart) {
    Form out(16);
    const auto target = make_exponent(xpart);
    for (const auto& [e, c] : id.m.terms()) {
      bool match = true;
      for (std::size_t k = 0; k < 3; ++k) match = match && e[3 + k] == target[k];
      if (!match) continue;
      Exponent rest = e;
      for (std::size_t k = 0; k < 3; ++k) rest[3 + k] = 0;
      out += Form::monomial(16, rest, c);
    }
    return out;
  };
  const Form a = coeff_of({2, 0, 0}), b = coeff_of({0, 1, 1});
  EXPECT_FALSE(b.is_zero());
  EXPECT_EQ(a, -b);
  // beta_ijk is the coefficient of X_i X_j X_k; cubic monomials sit at
  // variables 6..15 in the order X0^3, X0^2X1, X0^2X2, X0X1^2, X0X1X2,
  // X0X2^2, X1^3, X1^2X2, X1X2^2, X2^3.
  auto beta = [](std::size_t k) { return Form::variable(16, 6 + k); };
  auto xi = [](std::size_t k) { return Form::variable(16, k); };
  const Form expected = beta(2) * xi(0) * xi(2) - beta(1) * xi(0) * xi(1) + beta(5) * xi(2) * xi(2) -
                        beta(3) * xi(1) * xi(1);
  EXPECT_TRUE(oracle::proportional(b, expected)) << b.to_string();
}

TEST(DifferentialIdentity, RandomPairs) {
  Sampler s(53);
  for (int i = 0; i < 50; ++i) {
    const auto id = differential_identity(s.bateman_input());
    EXPECT_TRUE(id.holds()) << id.residual.to_string();
  }
}

TEST(DifferentialIdentity, CorruptedFormLeavesResidual) {
  const PointConic theta(x(0) * x(0) + x(1) * x(2) * Rational(2));
  Sampler s(54);
  const auto id = differential_identity(BatemanInput(theta, s.form(3, 3)));
  ASSERT_TRUE(id.holds());
  Form corrupted = id.m;
  corrupted.add_term(make_exponent({2, 0, 0, 2, 0, 0}), 1);
  EXPECT_FALSE(differential_residual(theta, corrupted).is_zero());
}

TEST(BatemanPoints, StandardPair) {
  const Config7 z = bateman_points(sphere_xyz());
  EXPECT_TRUE(same_points(z, kBatemanPoints));
}

TEST(BatemanPoints, DiagonalSquares) {
  const Config7 z = bateman_points(diagonal(2, 3));
  const std::vector<HomPoint> want{HomPoint(1, 0, 0), HomPoint(0, 1, 0),  HomPoint(0, 0, 1),  HomPoint(6, 3, 2),
                                   HomPoint(6, -3, 2), HomPoint(6, 3, -2), HomPoint(6, -3, -2)};
  EXPECT_TRUE(same_points(z, want));
  for (const auto& p : z.points())
    for (const auto& c : bateman_minors(diagonal(2, 3))) EXPECT_EQ(evaluate(c, p), 0);
  for (const auto& q : q_values(z)) EXPECT_NE(q, 0);
}

TEST(BatemanPoints, IrrationalPointsAreReported) {
  const BatemanInput inp(PointConic(x(0) * x(0) + x(1) * x(1) * Rational(2) + x(2) * x(2) * Rational(3)),
                         x(0) * x(1) * x(2));
  EXPECT_THROW(bateman_points(inp), NotRationallySolvable);
}

TEST(Geiser, StandardPairExample) {
  const BatemanInput inp = sphere_xyz();
  const HomPoint q = geiser_image(inp, HomPoint(1, 1, 0));
  EXPECT_EQ(q, HomPoint(1, -1, 0));
  EXPECT_EQ(evaluate(x(0) + x(1), q), 0);
  // Polar line of (1,1,0) for D: the polar of (1,1,0) for X1X2 + X0X2, i.e. 2 X2.
  EXPECT_EQ(evaluate(x(2), q), 0);
}

TEST(Geiser, BasePointIsRejected) { EXPECT_THROW(geiser_image(sphere_xyz(), HomPoint(1, 1, -1)), DegenerateInput); }

TEST(Geiser, FiberPartnerHasTheSameImage) {
  Sampler s(55);
  int checked = 0;
  for (int attempt = 0; attempt < 40 && checked < 5; ++attempt) {
    const BatemanInput inp = s.bateman_input();
    const HomPoint p = s.point();
    const HomPoint q = geiser_image(inp, p);
    // The fiber over q lies on the polar line of q for theta and on the polar conic of q for D.
    const LineCoeffs line = line_coefficients(polar(q, inp.theta.form()));
    const auto pts = points_of(line);
    const Form quad = on_line(polar(q, inp.d_cubic), pts[0], pts[1]);
    if (quad.is_zero()) continue;
    const auto roots = binary_rational_roots(quad);
    ASSERT_FALSE(roots.empty());
    std::vector<HomPoint> fiber;
    for (const auto& r : roots) {
      std::array<Rational, 3> c;
      for (std::size_t i = 0; i < 3; ++i) c[i] = r.t0 * pts[0][i] + r.t1 * pts[1][i];
      fiber.push_back(HomPoint(c));
    }
    bool has_p = false;
    for (const auto& f : fiber) has_p = has_p || f == p;
    EXPECT_TRUE(has_p);
    for (const auto& f : fiber) {
      if (f == p) continue;
      EXPECT_EQ(geiser_image(inp, f), q);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 5);
}

TEST(BranchQuartic, HomogeneousOfDegreeFour) {
  Sampler s(56);
  const Form b = branch_quartic(s.bateman_input());
  EXPECT_TRUE(b.is_homogeneous());
  EXPECT_EQ(b.degree(), 4);
  const HomPoint p = s.point();
  const Rational lambda(-4, 3);
  EXPECT_EQ(evaluate(b, p.scaled(lambda)), evaluate(b, p) * power(lambda, 4));
}

TEST(BranchQuartic, TangencyAtPointsOfTheQuartic) {
  Sampler s(57);
  const RobertsData r = s.roberts_data();
  const BatemanInput inp = reverse_roberts(r);
  const Form b = branch_quartic(inp);
  const auto lq = luroth_closed_form(r);
  const auto pent = pentalateral_ops({r.lines[0], r.lines[1], r.lines[2], r.lines[3], line_coefficients(lq.fifth_line)});
  for (const auto& v : pent.pentalateral.vertices) {
    ASSERT_EQ(evaluate(b, v), 0);
    EXPECT_EQ(polar_tangency_discriminant(inp, v), 0);
    const auto pts = points_of(line_coefficients(polar(v, inp.theta.form())));
    EXPECT_EQ(quadratic_discriminant(on_line(polar(v, inp.d_cubic), pts[0], pts[1])), 0);
  }
  const HomPoint off = s.point();
  if (sgn(evaluate(b, off)) != 0) {
    const auto pts = points_of(line_coefficients(polar(off, inp.theta.form())));
    EXPECT_NE(quadratic_discriminant(on_line(polar(off, inp.d_cubic), pts[0], pts[1])), 0);
  }
}

TEST(ReverseRoberts, UnitCoefficientsExpandDirectly) {
  RobertsData r;
  r.lines = {LineCoeffs{1, 0, 0}, LineCoeffs{0, 1, 0}, LineCoeffs{0, 0, 1}, LineCoeffs{-1, -1, -1}};
  r.a = {1, 1, 1, 1};
  r.b = {1, 1, 1, 1};
  ASSERT_TRUE(r.normalized());
  const BatemanInput inp = reverse_roberts(r);
  const Form s = x(0) + x(1) + x(2);
  EXPECT_EQ(inp.theta.form(), x(0) * x(0) + x(1) * x(1) + x(2) * x(2) + s * s);
  EXPECT_EQ(inp.d_cubic, x(0).pow(3) + x(1).pow(3) + x(2).pow(3) - s.pow(3));
}

TEST(RobertsPencil, DimensionTwoAndApolar) {
  Sampler s(58);
  for (int i = 0; i < 50; ++i) {
    const BatemanInput inp = i % 2 ? reverse_roberts(s.roberts_data()) : s.bateman_input();
    const auto pencil = roberts_pencil(inp);
    for (const auto& member : pencil) {
      EXPECT_TRUE(apolarity_pair(member.form(), inp.theta.form()).is_zero());
      EXPECT_TRUE(apolarity_pair(member.form(), inp.d_cubic).is_zero());
    }
    EXPECT_EQ(oracle::gauss_rank({coefficient_vector(pencil[0].form(), 2), coefficient_vector(pencil[1].form(), 2)}), 2u);
  }
}

TEST(RobertsPencil, SpannedByLineConicsThroughTheFourDualPoints) {
  Sampler s(59);
  const RobertsData r = s.roberts_data();
  const BatemanInput inp = reverse_roberts(r);
  // Line conics vanishing at the coefficient vectors of the four lines.
  oracle::Dense eval;
  for (const auto& l : r.lines) {
    std::vector<Rational> row;
    for (const auto& e : monomials(3, 2)) row.push_back(monomial_value(e, l, 3));
    eval.push_back(row);
  }
  const auto ker = kernel(QMatrix::from_rows(eval));
  ASSERT_EQ(ker.size(), 2u);
  for (const auto& v : ker) {
    const Form sigma = form_from_coefficients(3, 2, v);
    EXPECT_TRUE(apolarity_pair(sigma, inp.theta.form()).is_zero());
    EXPECT_TRUE(apolarity_pair(sigma, inp.d_cubic).is_zero());
  }
  const auto pencil = roberts_pencil(inp);
  oracle::Dense all{ker[0], ker[1], coefficient_vector(pencil[0].form(), 2), coefficient_vector(pencil[1].form(), 2)};
  EXPECT_EQ(oracle::gauss_rank(all), 2u);
}

TEST(RobertsLines, RoundTrip) {
  Sampler s(60);
  for (int i = 0; i < 25; ++i) {
    const RobertsData r = s.roberts_data();
    const RobertsData back = roberts_lines(reverse_roberts(r));
    EXPECT_TRUE(back.normalized());
    EXPECT_TRUE(roberts_match(r, back).has_value());
    const BatemanInput again = reverse_roberts(back);
    const BatemanInput orig = reverse_roberts(r);
    EXPECT_EQ(again.theta.form(), orig.theta.form());
    EXPECT_EQ(again.d_cubic, orig.d_cubic);
  }
}

TEST(RobertsLines, IrrationalLinesReturnThePencil) {
  // Lines X0 +- sqrt2 X1, X2, -(2 X0 + X2) with unit coefficients.
  const Form s2 = x(0) * Rational(2) + x(2);
  const Form theta = x(0) * x(0) * Rational(2) + x(1) * x(1) * Rational(4) + x(2) * x(2) + s2 * s2;
  const Form d = x(0).pow(3) * Rational(2) + x(0) * x(1) * x(1) * Rational(12) + x(2).pow(3) - s2.pow(3);
  const BatemanInput inp(PointConic(theta), d);
  const auto dec = roberts_decompose(inp);
  EXPECT_FALSE(dec.data.has_value());
  EXPECT_FALSE(dec.failure.empty());
  for (const auto& member : dec.pencil) EXPECT_TRUE(apolarity_pair(member.form(), d).is_zero());
  EXPECT_THROW(roberts_lines(inp), NotRationallySolvable);
}

TEST(LurothClosedForm, VerticesOnQuarticAndProportionalToBranchQuartic) {
  Sampler s(61);
  for (int i = 0; i < 10; ++i) {
    const RobertsData r = s.roberts_data();
    const auto lq = luroth_closed_form(r);
    EXPECT_EQ(lq.quartic.degree(), 4);
    const auto pent =
        pentalateral_ops({r.lines[0], r.lines[1], r.lines[2], r.lines[3], line_coefficients(lq.fifth_line)});
    for (const auto& v : pent.pentalateral.vertices) EXPECT_EQ(evaluate(lq.quartic, v), 0);
    EXPECT_TRUE(oracle::proportional(lq.quartic, branch_quartic(reverse_roberts(r))));
  }
}

TEST(LurothClosedForm, FifthLineFormula) {
  Sampler s(62);
  const RobertsData r = s.roberts_data();
  Rational sum_ab = 0;
  Form l(3);
  for (std::size_t k = 0; k < 4; ++k) {
    sum_ab += r.a[k] / r.b[k];
    l += r.line(k) * (r.a[k] * r.a[k] / r.b[k]);
  }
  EXPECT_EQ(luroth_closed_form(r).fifth_line, l * (-1 / (sum_ab * sum_ab)));
}

TEST(LurothClosedForm, DegenerateInputs) {
  RobertsData r;
  r.lines = {LineCoeffs{1, 0, 0}, LineCoeffs{0, 1, 0}, LineCoeffs{0, 0, 1}, LineCoeffs{-1, -1, -1}};
  r.a = {1, 1, 1, 1};
  r.b = {1, 1, 1, 1};
  EXPECT_THROW(luroth_closed_form(r), DegenerateInput);  // L vanishes
  r.a = {1, 2, 3, 4};
  r.b = {1, 0, 2, 3};
  EXPECT_THROW(luroth_closed_form(r), DegenerateInput);  // zero b
  r.a = {1, 1, 1, 1};
  r.b = {1, 1, -1, -1};
  EXPECT_THROW(luroth_closed_form(r), DegenerateInput);  // sum a/b = 0
}

TEST(Pentalateral, GenericLines) {
  Sampler s(63);
  std::array<LineCoeffs, 5> lines;
  for (auto& l : lines) l = s.point(50).coords();
  const auto p = pentalateral_ops(lines);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i + 1; j < 10; ++j) EXPECT_FALSE(p.pentalateral.vertices[i] == p.pentalateral.vertices[j]);
  for (const auto& b : p.basis)
    for (const auto& v : p.pentalateral.vertices) EXPECT_EQ(evaluate(b, v), 0);
  for (const auto& v : p.pentalateral.vertices) {
    int on = 0;
    for (const auto& l : lines) on += sgn(evaluate(Form::linear(3, l), v)) == 0;
    EXPECT_EQ(on, 2);
  }
}

TEST(Pentalateral, ConcurrentLinesRejected) {
  std::array<LineCoeffs, 5> lines{LineCoeffs{1, 0, 0}, LineCoeffs{0, 1, 0}, LineCoeffs{1, 1, 0}, LineCoeffs{1, 2, 3},
                                  LineCoeffs{-2, 5, 1}};
  EXPECT_THROW(pentalateral_ops(lines), DegenerateInput);
}

TEST(Pentalateral, ReciprocalSumLiesInTheBasisSpan) {
  Sampler s(64);
  std::array<LineCoeffs, 5> lines;
  for (auto& l : lines) l = s.point().coords();
  std::array<Rational, 5> w;
  for (auto& c : w) c = s.nonzero_rational(9, 4);
  const auto p = pentalateral_ops(lines);
  // Clear sum 1 / (w_k l_k) by multiplying with prod w_k l_k directly.
  Form cleared(3);
  for (std::size_t k = 0; k < 5; ++k) {
    Form term = Form::constant(3, 1);
    for (std::size_t j = 0; j < 5; ++j)
      if (j != k) term *= Form::linear(3, lines[j]) * w[j];
    cleared += term;
  }
  EXPECT_EQ(reciprocal_sum_quartic(lines, w), cleared);
  const auto coords = basis_coordinates(p, cleared);
  ASSERT_TRUE(coords.has_value());
  Form rebuilt(3);
  for (std::size_t k = 0; k < 5; ++k) rebuilt += p.basis[k] * (*coords)[k];
  EXPECT_EQ(rebuilt, cleared);
}

TEST(FifthLine, RecoveredFromTheQuartic) {
  Sampler s(65);
  for (int i = 0; i < 5; ++i) {
    const RobertsData r = s.roberts_data();
    const auto lq = luroth_closed_form(r);
    const auto fl = fifth_line(lq.quartic, r.lines);
    EXPECT_TRUE(oracle::proportional(Form::linear(3, fl.line), lq.fifth_line));
  }
}
