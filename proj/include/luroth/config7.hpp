#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "luroth/apolarity.hpp"
#include "luroth/errors.hpp"
#include "luroth/exact/form.hpp"
#include "luroth/exact/matrix.hpp"
#include "luroth/point.hpp"

namespace luroth {

/// Seven labeled plane points with their degeneracy flags. Any seven points
/// can be stored; the Morley constructions check the flags they need.
class Config7 {
 public:
  explicit Config7(std::array<HomPoint, 7> points);
  static Config7 from_span(std::span<const HomPoint> points);

  const std::array<HomPoint, 7>& points() const { return points_; }
  const HomPoint& operator[](std::size_t i) const { return points_[i]; }

  bool pairwise_distinct() const { return distinct_; }
  /// six_on_conic(i): the six points other than P_i lie on a conic.
  bool six_on_conic(std::size_t i) const { return six_on_conic_[i]; }
  bool any_six_on_conic() const;
  bool all_on_conic() const { return all_on_conic_; }

  /// Throw DegenerateInput when the flag does not hold.
  void require_distinct() const;
  void require_not_on_conic() const;

  Config7 with_point(std::size_t i, const HomPoint& p) const;
  Config7 swapped(std::size_t i, std::size_t j) const;

 private:
  std::array<HomPoint, 7> points_;
  bool distinct_ = false;
  std::array<bool, 7> six_on_conic_{};
  bool all_on_conic_ = false;
};

/// Q(p1..p6) = |134||156||235||246| - |135||146||234||256|.
Rational q_invariant(std::span<const HomPoint> six);

/// Q of the six points left after removing P_i, in label order.
std::array<Rational, 7> q_values(const Config7& z);

/// Determinant of the 6x6 matrix of degree-2 monomials at six points.
Rational veronese_det(std::span<const HomPoint> six);

/// Basis of the cubics through Z (kernel of the 7x10 evaluation matrix).
struct CubicNet {
  std::array<Form, 3> basis;
};
CubicNet cubic_net(const Config7& z);

/// 2x3 matrix with a row of linear forms and a row of quadrics whose signed
/// maximal minors L x theta generate the ideal of Z.
struct HilbertBurchMatrix {
  std::array<Form, 3> linear;
  std::array<Form, 3> quadric;

  std::array<Form, 3> minors() const;
  bool linear_row_independent() const;
};
HilbertBurchMatrix hilbert_burch(const Config7& z);
/// The linear syzygy sum L_j C_j = 0 among a given net basis (unique up to scale).
std::array<Form, 3> linear_syzygy(const CubicNet& net);

/// Bihomogeneous forms of bidegree (a, b) live in 6 variables: xi0..xi2 then X0..X2.
inline constexpr std::size_t kXiOffset = 0;
inline constexpr std::size_t kXOffset = 3;

/// The 29 x 30 linear system for the coefficients of P(xi, X) = sum xi_j D_j(X):
/// 15 rows for P(X, X) = 0, then per point one degree-3 and one degree-2 row.
/// Column j*10 + m is the coefficient of xi_j X^m (cubic monomials in
/// descending lex order).
QMatrix morley_condition_matrix(const Config7& z);
/// 15 + 3*7 = 36 rows: every condition D_j(P_i) = 0 without reduction.
QMatrix morley_full_condition_matrix(const Config7& z);

/// Canonically scaled S(xi, X): coefficients are the signed maximal minors of
/// the condition matrix. Throws DegenerateInput when its kernel is not a line.
Form morley_S(const Config7& z);
/// S from the coefficient vector over the 30 unknowns.
Form bihomogeneous_from_coefficients(std::span<const Rational> coeffs);

/// M(xi, X) = polar of S(xi, .) with pole xi (bidegree (2, 2)).
Form morley_form(const Form& s);
/// N[h][k] = coefficient of xi^h X^k over the degree-2 monomial basis.
/// Throws std::logic_error when the coefficients are not skew.
SkewMatrix6 skew_matrix_of(const Form& m);
SkewMatrix6 morley_matrix(const Config7& z);

Rational morley_pfaffian(const Config7& z);

/// Psi = F / prod Q. Throws DegenerateInput when six points lie on a conic.
Rational morley_invariant(const Config7& z);

struct MorleyData {
  Form s;
  Form m;
  SkewMatrix6 n;
  Rational f;
  std::array<Rational, 7> q_values;
  std::optional<Rational> psi;
};
MorleyData morley_data(const Config7& z);

/// Skew-symmetrization over S7 of the Fano product
/// |142||253||361||175||276||374||456|, divided by 168.
Rational morley_invariant_fano(std::span<const HomPoint> seven);
/// Same with the point at `symbolic_index` replaced by (X0, X1, X2); `six`
/// holds the remaining points in order. The result is a cubic form.
Form morley_invariant_fano(std::span<const HomPoint> six, std::size_t symbolic_index);

/// Ratio psi_fano / psi_quotient, identical for every configuration on which
/// both routes are defined.
Rational fano_to_quotient_ratio();

/// The cubic X -> Psi(P1..P6, X). Throws DegenerateInput for three collinear
/// points or an identically zero result.
Form seventh_cubic(std::span<const HomPoint> six);

/// Sixth intersection point Q_i of theta_i (conic through the points other
/// than P_i) with D_i (cubic through all six, apolar to theta_i).
struct SixthPoint {
  std::optional<PointConic> theta;
  std::optional<Form> cubic;
  std::optional<HomPoint> point;
  std::string error;
};
std::array<SixthPoint, 6> sixth_points(std::span<const HomPoint> six);

/// Determinant of the 3x3 matrix of partials of the net basis.
Form jacobian_sextic(const CubicNet& net);

}  // namespace luroth
