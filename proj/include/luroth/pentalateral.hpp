#pragma once

#include <array>

#include "luroth/roberts.hpp"

namespace luroth {

/// Five lines, any three independent, with their ten pairwise intersections
/// ordered (1,2), (1,3), ..., (4,5).
struct Pentalateral {
  std::array<LineCoeffs, 5> lines;
  std::array<HomPoint, 10> vertices;
};

struct PentalateralData {
  Pentalateral pentalateral;
  /// basis[k] = product of the lines other than line k.
  std::array<Form, 5> basis;
};

/// Throws DegenerateInput unless the five lines form a complete pentalateral.
PentalateralData pentalateral_ops(const std::array<LineCoeffs, 5>& lines);

/// sum_k 1 / (w_k l_k) cleared of denominators:
/// sum_k (prod_{j != k} w_j) * basis[k].
Form reciprocal_sum_quartic(const std::array<LineCoeffs, 5>& lines, const std::array<Rational, 5>& w);

/// Coefficients of a quartic in the basis of a pentalateral, when it lies in
/// their span.
std::optional<std::array<Rational, 5>> basis_coordinates(const PentalateralData& p, const Form& quartic);

/// The quartic B = L * sum_k prod_{j != k} (b_j l_j) + prod_k (b_k l_k) and
/// its fifth line L = -(sum a/b)^(-2) * sum (a^2 / b) l.
struct LurothQuartic {
  Form quartic;
  Form fifth_line;
};
/// Requires normalized lines. Throws DegenerateInput for a zero b, a zero
/// sum a/b, or a vanishing L.
LurothQuartic luroth_closed_form(const RobertsData& r);

/// Recovers the fifth line of a pentalateral inscribed in `quartic` from four
/// of its lines: on two of the lines the quartic meets the other three at
/// known vertices, and the remaining intersection lies on the fifth line.
/// Throws DegenerateInput if the result is not a complete pentalateral whose
/// basis spans the quartic.
struct FifthLine {
  LineCoeffs line;
  std::array<Rational, 5> coordinates;
};
FifthLine fifth_line(const Form& quartic, const std::array<LineCoeffs, 4>& lines);

}  // namespace luroth
