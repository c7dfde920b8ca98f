#include "luroth/roberts.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace luroth {

LineCoeffs line_coefficients(const Form& linear) {
  const auto c = coefficient_vector(linear, 1);
  return {c[0], c[1], c[2]};
}

bool RobertsData::normalized() const {
  for (std::size_t i = 0; i < 3; ++i)
    if (sgn(lines[0][i] + lines[1][i] + lines[2][i] + lines[3][i]) != 0) return false;
  return true;
}

void require_general_lines(std::span<const LineCoeffs> lines) {
  const std::size_t n = lines.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const QMatrix m = QMatrix::from_rows({{lines[i].begin(), lines[i].end()},
                                              {lines[j].begin(), lines[j].end()},
                                              {lines[k].begin(), lines[k].end()}});
        if (sgn(det3(m)) == 0) {
          throw DegenerateInput("lines " + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                ", " + std::to_string(k + 1) + " are concurrent or dependent");
        }
      }
}

RobertsData normalize_roberts(const RobertsData& r) {
  require_general_lines(r.lines);
  QMatrix m(3, 4);
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < 3; ++i) m(i, k) = r.lines[k][i];
  const auto ker = kernel(m);
  if (ker.size() != 1) throw DegenerateInput("normalize_roberts: lines do not have a unique relation");
  RobertsData out;
  for (std::size_t k = 0; k < 4; ++k) {
    const Rational& c = ker[0][k];
    if (sgn(c) == 0) throw DegenerateInput("normalize_roberts: relation has a zero coefficient");
    for (std::size_t i = 0; i < 3; ++i) out.lines[k][i] = r.lines[k][i] * c;
    out.a[k] = r.a[k] / (c * c);
    out.b[k] = r.b[k] / (c * c * c);
  }
  return out;
}

BatemanInput reverse_roberts(const RobertsData& r) {
  Form theta(3), d(3);
  for (std::size_t k = 0; k < 4; ++k) {
    const Form l = r.line(k);
    theta += l * l * r.a[k];
    d += l * l * l * r.b[k];
  }
  if (d.is_zero()) throw DegenerateInput("reverse_roberts: cubic vanishes");
  PointConic conic(theta);
  if (!conic.nonsingular()) throw DegenerateInput("reverse_roberts: conic is singular");
  return BatemanInput(conic, d);
}

std::array<LineConic, 2> roberts_pencil(const BatemanInput& inp) {
  const auto quad = monomials(3, 2);
  QMatrix m(4, quad.size());
  for (std::size_t c = 0; c < quad.size(); ++c) {
    const Form op = Form::monomial(3, quad[c], 1);
    m(0, c) = apolarity_pair(op, inp.theta.form()).coefficient(Exponent{});
    const auto lin = coefficient_vector(apolarity_pair(op, inp.d_cubic), 1);
    for (std::size_t r = 0; r < 3; ++r) m(1 + r, c) = lin[r];
  }
  const auto ker = kernel(m);
  if (ker.size() != 2) {
    throw DegenerateInput("roberts_pencil: apolar line conics form a space of dimension " +
                          std::to_string(ker.size()));
  }
  return {LineConic(form_from_coefficients(3, 2, ker[0])),
          LineConic(form_from_coefficients(3, 2, ker[1]))};
}

namespace {

// The two lines of a rank-2 conic matrix, when they are rational.
std::optional<std::array<LineCoeffs, 2>> split_pair(const QMatrix& m) {
  const auto singular = kernel(m);
  if (singular.size() != 1) return std::nullopt;
  const QVector& sp = singular[0];
  std::size_t k = 0;
  while (sgn(sp[k]) == 0) ++k;
  const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
  const Form q = binary_from_coefficients({m(i, i), 2 * m(i, j), m(j, j)});
  const auto roots = binary_rational_roots(q);
  if (roots.size() != 2) return std::nullopt;
  std::array<LineCoeffs, 2> out;
  for (std::size_t r = 0; r < 2; ++r) {
    std::array<Rational, 3> pt{0, 0, 0};
    pt[i] = roots[r].t0;
    pt[j] = roots[r].t1;
    out[r] = cross(sp, pt);
  }
  return out;
}

std::optional<QVector> solve_power_sum(const std::array<LineCoeffs, 4>& lines, unsigned power,
                                       const Form& target) {
  const std::size_t n = monomials(3, power).size();
  QMatrix m(n, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto col = coefficient_vector(Form::linear(3, lines[k]).pow(power), power);
    for (std::size_t r = 0; r < n; ++r) m(r, k) = col[r];
  }
  const auto sol = solve(m, coefficient_vector(target, power));
  if (!sol || !sol->unique) return std::nullopt;
  return sol->x;
}

}  // namespace

RobertsDecomposition roberts_decompose(const BatemanInput& inp) {
  RobertsDecomposition out{roberts_pencil(inp), std::nullopt, {}};
  const QMatrix& m1 = out.pencil[0].matrix();
  const QMatrix& m2 = out.pencil[1].matrix();
  std::array<Form, 9> entries;
  for (std::size_t i = 0; i < 9; ++i) {
    entries[i] = Form::variable(2, 0) * m1(i / 3, i % 3) + Form::variable(2, 1) * m2(i / 3, i % 3);
  }
  const Form cubic = det3(entries);
  if (cubic.is_zero()) {
    out.failure = "every member of the pencil is degenerate";
    return out;
  }
  std::vector<std::array<LineCoeffs, 2>> split;
  for (const auto& root : binary_rational_roots(cubic)) {
    QMatrix m(3, 3);
    for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = root.t0 * m1(i / 3, i % 3) + root.t1 * m2(i / 3, i % 3);
    if (auto pair = split_pair(m)) split.push_back(*pair);
  }
  if (split.size() < 2) {
    out.failure = "degenerate members of the pencil do not split over the rationals";
    return out;
  }

  RobertsData r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r.lines[i * 2 + j] = cross(split[0][i], split[1][j]);
  try {
    RobertsData unit = r;
    unit.a.fill(1);
    unit.b.fill(1);
    r = normalize_roberts(unit);
  } catch (const DegenerateInput& e) {
    out.failure = e.what();
    return out;
  }
  const auto a = solve_power_sum(r.lines, 2, inp.theta.form());
  const auto b = solve_power_sum(r.lines, 3, inp.d_cubic);
  if (!a || !b) {
    out.failure = "conic or cubic is not a combination of powers of the base lines";
    return out;
  }
  std::copy(a->begin(), a->end(), r.a.begin());
  std::copy(b->begin(), b->end(), r.b.begin());
  out.data = r;
  return out;
}

RobertsData roberts_lines(const BatemanInput& inp) {
  auto dec = roberts_decompose(inp);
  if (!dec.data) throw NotRationallySolvable("roberts_lines: " + dec.failure);
  return *dec.data;
}

std::optional<std::array<std::size_t, 4>> roberts_match(const RobertsData& expected,
                                                        const RobertsData& actual) {
  std::array<std::size_t, 4> p;
  std::iota(p.begin(), p.end(), 0);
  do {
    const LineCoeffs& e0 = expected.lines[p[0]];
    const LineCoeffs& a0 = actual.lines[0];
    std::size_t i = 0;
    while (i < 3 && sgn(e0[i]) == 0) ++i;
    if (i == 3 || sgn(a0[i]) == 0) continue;
    const Rational c = a0[i] / e0[i];
    bool ok = true;
    for (std::size_t k = 0; k < 4 && ok; ++k) {
      for (std::size_t j = 0; j < 3; ++j) ok = ok && actual.lines[k][j] == c * expected.lines[p[k]][j];
      ok = ok && actual.a[k] == expected.a[p[k]] / (c * c);
      ok = ok && actual.b[k] == expected.b[p[k]] / (c * c * c);
    }
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

}  // namespace luroth
