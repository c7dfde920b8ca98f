#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "luroth/exact/form.hpp"
#include "luroth/exact/matrix.hpp"
#include "luroth/point.hpp"

namespace luroth {

class CubicSurface {
 public:
  /// Throws std::invalid_argument unless f is a nonzero cubic in 4 variables.
  explicit CubicSurface(Form f);
  const Form& form() const { return form_; }
  bool contains(const HomPoint4& z) const { return sgn(evaluate(form_, z)) == 0; }

 private:
  Form form_;
};

/// Full polarization f(x, y, z) = (1/6) sum d^3F/dX_i dX_j dX_k x_i y_j z_k.
Rational trilinear_eval(const CubicSurface& s, std::span<const Rational> x, std::span<const Rational> y,
                        std::span<const Rational> z);

/// 3 f(z,X,X)^2 - 4 f(z,z,X) f(X,X,X): the quartic cone with vertex z over
/// the branch curve of the projection from z. Rejects z off the surface.
Form branch_cone(const CubicSurface& s, const HomPoint4& z);

/// b(P y) for a 4 x 3 matrix P of rank 3.
Form restrict_to_plane(const Form& b, const QMatrix& plane);

/// Cubic surface through the image of the plane under the cubics through six
/// points.
struct SurfaceFromPoints {
  CubicSurface surface;
  /// Basis of the cubics through the six points; mu(P) = (mu_0(P), ..., mu_3(P)).
  std::array<Form, 4> mu;
  std::size_t samples = 0;

  std::array<Rational, 4> map(const HomPoint& p) const;
};
/// Interpolates the surface equation from at least 25 sampled images drawn
/// from `seed`. Throws DegenerateInput for three collinear points, six
/// points on a conic, or an interpolation kernel that is not a line after
/// one resampling.
SurfaceFromPoints surface_from_6points(std::span<const HomPoint> six, std::uint64_t seed);

}  // namespace luroth
