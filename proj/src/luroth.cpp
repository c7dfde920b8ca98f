#include <stdexcept>

#include "luroth/pentalateral.hpp"

namespace luroth {

PentalateralData pentalateral_ops(const std::array<LineCoeffs, 5>& lines) {
  try {
    require_general_lines(lines);
  } catch (const DegenerateInput& e) {
    throw DegenerateInput(std::string("not a complete pentalateral: ") + e.what());
  }
  std::vector<HomPoint> vertices;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) vertices.emplace_back(cross(lines[i], lines[j]));
  PentalateralData out{{lines, {vertices[0], vertices[1], vertices[2], vertices[3], vertices[4],
                                vertices[5], vertices[6], vertices[7], vertices[8], vertices[9]}},
                       {}};
  for (std::size_t k = 0; k < 5; ++k) {
    Form prod = Form::constant(3, 1);
    for (std::size_t j = 0; j < 5; ++j)
      if (j != k) prod *= Form::linear(3, lines[j]);
    out.basis[k] = prod;
  }
  return out;
}

Form reciprocal_sum_quartic(const std::array<LineCoeffs, 5>& lines, const std::array<Rational, 5>& w) {
  const auto p = pentalateral_ops(lines);
  Form q(3);
  for (std::size_t k = 0; k < 5; ++k) {
    Rational c = 1;
    for (std::size_t j = 0; j < 5; ++j)
      if (j != k) c *= w[j];
    q += p.basis[k] * c;
  }
  return q;
}

std::optional<std::array<Rational, 5>> basis_coordinates(const PentalateralData& p, const Form& quartic) {
  QMatrix m(15, 5);
  for (std::size_t k = 0; k < 5; ++k) {
    const auto col = coefficient_vector(p.basis[k], 4);
    for (std::size_t r = 0; r < 15; ++r) m(r, k) = col[r];
  }
  const auto sol = solve(m, coefficient_vector(quartic, 4));
  if (!sol || !sol->unique) return std::nullopt;
  return std::array<Rational, 5>{sol->x[0], sol->x[1], sol->x[2], sol->x[3], sol->x[4]};
}

LurothQuartic luroth_closed_form(const RobertsData& r) {
  if (!r.normalized()) throw std::invalid_argument("luroth_closed_form: lines must sum to zero");
  Rational sum_ab = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    if (sgn(r.b[k]) == 0) throw DegenerateInput("luroth_closed_form: b has a zero entry");
    sum_ab += r.a[k] / r.b[k];
  }
  if (sgn(sum_ab) == 0) throw DegenerateInput("luroth_closed_form: sum of a/b vanishes");
  Form l(3);
  for (std::size_t k = 0; k < 4; ++k) l += r.line(k) * (r.a[k] * r.a[k] / r.b[k]);
  l *= -1 / (sum_ab * sum_ab);
  if (l.is_zero()) throw DegenerateInput("luroth_closed_form: fifth line vanishes");

  std::array<Form, 4> bl;
  for (std::size_t k = 0; k < 4; ++k) bl[k] = r.line(k) * r.b[k];
  Form sum(3);
  for (std::size_t k = 0; k < 4; ++k) {
    Form prod = Form::constant(3, 1);
    for (std::size_t j = 0; j < 4; ++j)
      if (j != k) prod *= bl[j];
    sum += prod;
  }
  Form quartic = l * sum + bl[0] * bl[1] * bl[2] * bl[3];
  return {quartic, l};
}

namespace {

// The intersection of the quartic with line k other than the vertices on
// the three other known lines.
std::array<Rational, 3> residual_point(const Form& quartic, const std::array<LineCoeffs, 4>& lines,
                                       std::size_t k) {
  const auto dirs = kernel(QMatrix(1, 3, {lines[k].begin(), lines[k].end()}));
  std::array<Form, 3> param;
  for (std::size_t i = 0; i < 3; ++i) {
    param[i] = Form::variable(2, 0) * dirs[0][i] + Form::variable(2, 1) * dirs[1][i];
  }
  Form b = quartic.substitute(param);
  if (b.is_zero()) throw DegenerateInput("fifth_line: the quartic contains a given line");
  QMatrix basis(3, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    basis(i, 0) = dirs[0][i];
    basis(i, 1) = dirs[1][i];
  }
  for (std::size_t j = 0; j < 4; ++j) {
    if (j == k) continue;
    const auto v = cross(lines[k], lines[j]);
    const auto st = solve(basis, v);
    if (!st) throw std::logic_error("fifth_line: vertex not on its line");
    try {
      b = divide_by_root(b, sgn(st->x[1]) == 0 ? BinaryRoot{1, 0} : BinaryRoot{st->x[0] / st->x[1], 1});
    } catch (const std::domain_error&) {
      throw DegenerateInput("fifth_line: the quartic misses a vertex of the given lines");
    }
  }
  const auto c = binary_coefficients(b);
  const BinaryRoot root = sgn(c[0]) == 0 ? BinaryRoot{1, 0} : BinaryRoot{-c[1] / c[0], 1};
  std::array<Rational, 3> pt;
  for (std::size_t i = 0; i < 3; ++i) pt[i] = root.t0 * dirs[0][i] + root.t1 * dirs[1][i];
  return pt;
}

}  // namespace

FifthLine fifth_line(const Form& quartic, const std::array<LineCoeffs, 4>& lines) {
  if (quartic.nvars() != 3 || !quartic.is_homogeneous() || quartic.degree() != 4) {
    throw std::invalid_argument("fifth_line: expected a ternary quartic");
  }
  require_general_lines(lines);
  const auto p0 = residual_point(quartic, lines, 0);
  const auto p1 = residual_point(quartic, lines, 1);
  const auto line = cross(p0, p1);
  if (sgn(line[0]) == 0 && sgn(line[1]) == 0 && sgn(line[2]) == 0) {
    throw DegenerateInput("fifth_line: residual points coincide");
  }
  const auto data = pentalateral_ops({lines[0], lines[1], lines[2], lines[3], line});
  const auto coords = basis_coordinates(data, quartic);
  if (!coords) throw DegenerateInput("fifth_line: quartic is not spanned by the pentalateral basis");
  return {line, *coords};
}

}  // namespace luroth
