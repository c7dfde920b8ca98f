#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "luroth/bateman.hpp"

namespace luroth {

using LineCoeffs = std::array<Rational, 3>;

/// Coefficients of a linear form in X0, X1, X2.
LineCoeffs line_coefficients(const Form& linear);

/// Four lines with coefficients a, b such that theta = sum a_k l_k^2 and
/// D = sum b_k l_k^3.
struct RobertsData {
  std::array<LineCoeffs, 4> lines;
  std::array<Rational, 4> a;
  std::array<Rational, 4> b;

  Form line(std::size_t k) const { return Form::linear(3, lines[k]); }
  /// l_1 + l_2 + l_3 + l_4 == 0 exactly.
  bool normalized() const;
  friend bool operator==(const RobertsData&, const RobertsData&) = default;
};

/// Throws DegenerateInput unless any three of the lines are independent.
void require_general_lines(std::span<const LineCoeffs> lines);

/// Rescales the lines along their unique linear relation so that they sum to
/// zero; a and b absorb the factors so theta and D do not change.
RobertsData normalize_roberts(const RobertsData& r);

/// theta = sum a_k l_k^2, D = sum b_k l_k^3. Throws DegenerateInput when
/// theta is singular or D vanishes.
BatemanInput reverse_roberts(const RobertsData& r);

/// Line conics (forms in the dual operators) apolar to both theta and D.
/// Throws DegenerateInput unless the space is a pencil.
std::array<LineConic, 2> roberts_pencil(const BatemanInput& inp);

/// Result of the forward decomposition; `data` is empty when a degenerate
/// member of the pencil does not split over the rationals.
struct RobertsDecomposition {
  std::array<LineConic, 2> pencil;
  std::optional<RobertsData> data;
  std::string failure;
};
RobertsDecomposition roberts_decompose(const BatemanInput& inp);

/// The normalized decomposition; throws NotRationallySolvable carrying the
/// failure reason when it is not rational.
RobertsData roberts_lines(const BatemanInput& inp);

/// Index permutation p and scale c with lines'[k] = c * lines[p[k]],
/// a'[k] = a[p[k]] / c^2, b'[k] = b[p[k]] / c^3, when one exists.
std::optional<std::array<std::size_t, 4>> roberts_match(const RobertsData& expected,
                                                        const RobertsData& actual);

}  // namespace luroth
