#include <gtest/gtest.h>

#include "luroth/apolarity.hpp"
#include "luroth/errors.hpp"
#include "luroth/sampler.hpp"
#include "oracles.hpp"

using namespace luroth;

namespace {

Form x(std::size_t i) { return Form::variable(3, i); }
Form d(std::size_t i) { return Form::variable(3, i); }

PointConic theta0() { return PointConic(x(0) * x(0) + x(1) * x(2) * Rational(2)); }

// sum_ij b_ij d_i d_j applied to f by repeated differentiation.
Form apply_by_derivatives(const Form& op, const Form& f) {
  Form out(3);
  for (const auto& [e, c] : op.terms()) {
    Form g = f;
    for (std::size_t i = 0; i < 3; ++i)
      for (unsigned k = 0; k < e[i]; ++k) g = g.derivative(i);
    out += g * c;
  }
  return out;
}

// Points (2t, 2, -t^2) lie on X0^2 + 2 X1 X2.
HomPoint on_theta0(long t) { return HomPoint(2 * t, 2, -t * t); }

// A random conic through p: theta' - (theta'(p) / l(p)^2) l^2.
std::optional<PointConic> conic_through_point(Sampler& s, const HomPoint& p) {
  const Form base = s.form(3, 2);
  const Form l = Form::linear(3, std::array<Rational, 3>{s.rational(), s.rational(), s.rational()});
  const Rational lp = evaluate(l, p);
  if (sgn(lp) == 0) return std::nullopt;
  const PointConic c(base - l * l * (evaluate(base, p) / (lp * lp)));
  if (!c.nonsingular()) return std::nullopt;
  return c;
}

}  // namespace

TEST(ApolarityPair, DirectDifferentiation) {
  EXPECT_EQ(apolarity_pair(d(0) * d(1), x(0) * x(0) * x(1)), x(0) * Rational(2));
  const Form op = d(0) * d(0) + d(1) * d(2) * Rational(2);
  EXPECT_EQ(apolarity_pair(op, theta0().form()), Form::constant(3, 6));
  EXPECT_TRUE(apolarity_pair(op, x(1).pow(3)).is_zero());
}

TEST(ApolarityPair, RejectsOperatorOfHigherDegree) {
  EXPECT_THROW(apolarity_pair(d(0).pow(3), x(0) * x(1)), std::invalid_argument);
}

TEST(ApolarityPair, AgreesWithRepeatedDerivatives) {
  Sampler s(21);
  for (int i = 0; i < 10; ++i) {
    const Form op = s.form(3, 2), f = s.form(3, 3);
    EXPECT_EQ(apolarity_pair(op, f), apply_by_derivatives(op, f));
  }
}

TEST(Polar, OfTheStandardConic) {
  // Symbolic pole xi in variables 0..2, X in 3..5.
  const Form theta6 = theta0().form().embed(6, 3);
  const std::vector<Form> pole{Form::variable(6, 0), Form::variable(6, 1), Form::variable(6, 2)};
  const Form got = polarize(theta6, pole, 3);
  auto v = [](std::size_t i) { return Form::variable(6, i); };
  const Form want = (v(0) * v(3) + v(1) * v(5) + v(2) * v(4)) * Rational(2);
  EXPECT_EQ(got, want);
}

TEST(Polar, OfALinearFormIsItsValue) {
  const Form l = Form::linear(3, std::array<Rational, 3>{3, -1, 4});
  const HomPoint xi(1, 2, Rational(1, 2));
  EXPECT_EQ(polar(xi, l), Form::constant(3, 3));
}

TEST(Polar, EulerRelation) {
  Sampler s(22);
  for (int i = 0; i < 10; ++i) {
    const Form f = s.form(3, 3);
    const HomPoint xi = s.point(9, 3);
    EXPECT_EQ(evaluate(polar(xi, f), xi), 3 * evaluate(f, xi));
  }
}

TEST(DualConic, StandardExamples) {
  const Form want = d(0) * d(0) + d(1) * d(2) * Rational(2);
  EXPECT_TRUE(oracle::proportional(dual_conic(theta0()).form(), want));
  const PointConic sphere(x(0) * x(0) + x(1) * x(1) + x(2) * x(2));
  EXPECT_TRUE(oracle::proportional(dual_conic(sphere).form(), d(0) * d(0) + d(1) * d(1) + d(2) * d(2)));
}

TEST(DualConic, RejectsSingularConic) { EXPECT_THROW(dual_conic(PointConic(x(0) * x(1))), DegenerateInput); }

TEST(DualConic, IsAnInvolutionUpToScaleAndUsesTheAdjugate) {
  Sampler s(23);
  for (int i = 0; i < 10; ++i) {
    const PointConic theta = s.nonsingular_conic();
    const LineConic dual = dual_conic(theta);
    const QMatrix prod = dual.matrix() * theta.matrix();
    const Rational det = oracle::cofactor_det(theta.matrix());
    EXPECT_EQ(prod, QMatrix::from_rows({{det, 0, 0}, {0, det, 0}, {0, 0, det}}));
    EXPECT_TRUE(oracle::proportional(dual_conic(PointConic(dual.form())).form(), theta.form()));
  }
}

TEST(Conjugate, Examples) {
  EXPECT_TRUE(is_conjugate(PointConic(x(1) * x(1)), theta0()));
  EXPECT_FALSE(is_conjugate(theta0(), theta0()));
  // alpha_00 + alpha_12 = 0 on monomial coefficients; other terms free.
  const PointConic c(x(0) * x(0) * Rational(3) - x(1) * x(2) * Rational(3) + x(0) * x(1) * Rational(5) +
                     x(1) * x(1) * Rational(-2) + x(2) * x(2) * Rational(7) + x(0) * x(2));
  EXPECT_TRUE(is_conjugate(c, theta0()));
  EXPECT_THROW(is_conjugate(c, PointConic(x(0) * x(0))), DegenerateInput);
}

TEST(Conjugate, TangentLinesAtAPointOfTheConic) {
  Sampler s(24);
  int checked = 0;
  while (checked < 10) {
    const HomPoint xi = s.point(9, 2);
    const auto theta = conic_through_point(s, xi);
    if (!theta) continue;
    const Form tangent = polar(xi, theta->form());
    EXPECT_TRUE(is_conjugate(PointConic(tangent * tangent), *theta));
    const auto other = cross(xi.span(), s.point().span());
    const Form through = Form::linear(3, other);
    if (through.is_zero()) continue;
    EXPECT_TRUE(is_conjugate(PointConic(tangent * through), *theta));
    ++checked;
  }
}

TEST(Conjugate, PolarConicsOfApolarCubics) {
  Sampler s(25);
  const auto cubics = monomials(3, 3);
  for (int i = 0; i < 10; ++i) {
    const PointConic theta = s.nonsingular_conic();
    const Form op = dual_conic(theta).form();
    QMatrix m(3, 10);
    for (std::size_t c = 0; c < 10; ++c) {
      const auto lin = coefficient_vector(apply_by_derivatives(op, Form::monomial(3, cubics[c], 1)), 1);
      for (std::size_t r = 0; r < 3; ++r) m(r, c) = lin[r];
    }
    Form dcubic(3);
    for (const auto& v : kernel(m)) dcubic += form_from_coefficients(3, 3, v) * s.rational();
    if (dcubic.is_zero()) continue;
    ASSERT_TRUE(apolarity_pair(op, dcubic).is_zero());
    EXPECT_TRUE(is_conjugate(PointConic(polar(s.point(), dcubic)), theta));
  }
}

TEST(Conjugate, PolarCommutesWithApolarity) {
  Sampler s(26);
  for (int i = 0; i < 10; ++i) {
    const Form phi = s.form(3, 2), f = s.form(3, 4);
    const HomPoint xi = s.point();
    EXPECT_EQ(polar(xi, apolarity_pair(phi, f)), apolarity_pair(phi, polar(xi, f)));
  }
}

TEST(ApolarCubic, SatisfiesBothConditionSets) {
  std::vector<HomPoint> six;
  for (long t : {0L, 1L, 2L, 3L, -1L, -2L}) six.push_back(on_theta0(t));
  const Form cubic = apolar_cubic(theta0(), six);
  for (const auto& p : six) {
    std::vector<Rational> row = oracle::cubic_row(p);
    Rational v = 0;
    const auto c = oracle::cubic_coefficients(cubic);
    for (std::size_t k = 0; k < 10; ++k) v += row[k] * c[k];
    EXPECT_EQ(v, 0);
  }
  EXPECT_TRUE(apply_by_derivatives(d(0) * d(0) + d(1) * d(2) * Rational(2), cubic).is_zero());
}

TEST(ApolarCubic, ConicTimesLineIsNeverApolar) {
  Sampler s(27);
  const Form op = dual_conic(theta0()).form();
  for (int i = 0; i < 5; ++i) {
    const Form l = Form::linear(3, s.point().span());
    EXPECT_FALSE(apolarity_pair(op, theta0().form() * l).is_zero());
  }
}

TEST(ApolarCubic, RecoversAConstructedCubic) {
  // Build the apolar cubic whose restriction to (2 t s, 2 s^2, -t^2) is
  // prod (t - r_k s) by an independent linear solve, then recover it.
  const std::vector<long> roots{1, -3, 4, 5, -2, 7};
  const Form ts = Form::variable(2, 0), ss = Form::variable(2, 1);
  const std::array<Form, 3> q{ts * ss * Rational(2), ss * ss * Rational(2), -(ts * ts)};
  Form target = Form::constant(2, 1);
  for (long r : roots) target *= ts - ss * Rational(r);
  const auto cubics = monomials(3, 3);
  const Form op = d(0) * d(0) + d(1) * d(2) * Rational(2);
  QMatrix m(10, 11);
  for (std::size_t c = 0; c < 10; ++c) {
    const Form mono = Form::monomial(3, cubics[c], 1);
    const auto restricted = coefficient_vector(mono.substitute(q), 6);
    for (std::size_t r = 0; r < 7; ++r) m(r, c) = restricted[r];
    const auto lin = coefficient_vector(apply_by_derivatives(op, mono), 1);
    for (std::size_t r = 0; r < 3; ++r) m(7 + r, c) = lin[r];
  }
  const auto tv = coefficient_vector(target, 6);
  for (std::size_t r = 0; r < 7; ++r) m(r, 10) = -tv[r];
  const auto ker = kernel(m);
  ASSERT_EQ(ker.size(), 1u);
  const Form built = form_from_coefficients(3, 3, std::vector<Rational>(ker[0].begin(), ker[0].begin() + 10));
  std::vector<HomPoint> six;
  for (long r : roots) six.push_back(on_theta0(r));
  EXPECT_TRUE(oracle::proportional(apolar_cubic(theta0(), six), built));
}

TEST(ApolarCubic, RejectsPointsOffTheConic) {
  std::vector<HomPoint> six{on_theta0(0), on_theta0(1), on_theta0(2), on_theta0(3), on_theta0(4), HomPoint(1, 1, 1)};
  EXPECT_THROW(apolar_cubic(theta0(), six), std::invalid_argument);
}

TEST(ConicThrough, FivePoints) {
  std::vector<HomPoint> five;
  for (long t : {0L, 1L, 2L, 3L, 4L}) five.push_back(HomPoint(1, t, t * t));
  const PointConic c = conic_through(five);
  EXPECT_TRUE(oracle::proportional(c.form(), x(0) * x(2) - x(1) * x(1)));
}

TEST(ParametrizeConic, VeroneseConic) {
  const PointConic theta(x(0) * x(2) - x(1) * x(1));
  const auto param = parametrize_conic(theta, HomPoint(1, 0, 0));
  Form composed = theta.form().substitute(param.components());
  EXPECT_TRUE(composed.is_zero());
  EXPECT_EQ(param.point_at({1, 0}), HomPoint(1, 0, 0));
  // Points (t^2, t, 1) and (0, 0, 1) are reached at rational parameters.
  for (long t : {-3L, 1L, 2L, 5L}) {
    const HomPoint p(t * t, t, 1);
    EXPECT_EQ(param.point_at(param.parameter_of(p)), p);
  }
  EXPECT_EQ(param.point_at(param.parameter_of(HomPoint(0, 0, 1))), HomPoint(0, 0, 1));
}

TEST(ParametrizeConic, RecoversAKnownPointOnARandomConic) {
  Sampler s(28);
  int done = 0;
  while (done < 5) {
    const HomPoint base = s.point(9, 2);
    const auto theta = conic_through_point(s, base);
    if (!theta) continue;
    const auto param = parametrize_conic(*theta, base);
    EXPECT_TRUE(theta->form().substitute(param.components()).is_zero());
    // A second rational point: the other intersection of a line through base.
    const Form line = Form::linear(3, cross(base.span(), s.point().span()));
    if (line.is_zero()) continue;
    const Form restricted = line.substitute(param.components());
    const auto roots = binary_rational_roots(restricted);
    for (const auto& r : roots) {
      const HomPoint p = param.point_at(r);
      EXPECT_TRUE(theta->contains(p));
      EXPECT_EQ(evaluate(line, p), 0);
      EXPECT_EQ(param.point_at(param.parameter_of(p)), p);
    }
    ++done;
  }
}

TEST(ParametrizeConic, RejectsBasePointOffTheConic) {
  EXPECT_THROW(parametrize_conic(theta0(), HomPoint(1, 1, 1)), std::invalid_argument);
}
