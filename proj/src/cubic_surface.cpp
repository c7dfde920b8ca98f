#include "luroth/cubic_surface.hpp"

#include <stdexcept>

#include "luroth/apolarity.hpp"
#include "luroth/config7.hpp"
#include "luroth/errors.hpp"
#include "luroth/sampler.hpp"

namespace luroth {

CubicSurface::CubicSurface(Form f) : form_(std::move(f)) {
  if (form_.nvars() != 4 || form_.is_zero() || !form_.is_homogeneous() || form_.degree() != 3) {
    throw std::invalid_argument("CubicSurface: expected a nonzero cubic in 4 variables");
  }
}

Rational trilinear_eval(const CubicSurface& s, std::span<const Rational> x, std::span<const Rational> y,
                        std::span<const Rational> z) {
  if (x.size() != 4 || y.size() != 4 || z.size() != 4) {
    throw std::invalid_argument("trilinear_eval: expected 4-vectors");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const Form di = s.form().derivative(i);
    for (std::size_t j = 0; j < 4; ++j) {
      const Form dij = di.derivative(j);
      for (std::size_t k = 0; k < 4; ++k) {
        const Rational c = dij.derivative(k).coefficient(Exponent{});
        if (sgn(c) != 0) sum += c * x[i] * y[j] * z[k];
      }
    }
  }
  return sum / 6;
}

Form branch_cone(const CubicSurface& s, const HomPoint4& z) {
  if (!s.contains(z)) throw std::invalid_argument("branch_cone: " + z.to_string() + " is not on the surface");
  const Form fz = polar(z, s.form());
  const Form fzXX = fz * Rational(1, 3);
  const Form fzzX = polar(z, fz) * Rational(1, 6);
  return fzXX * fzXX * Rational(3) - fzzX * s.form() * Rational(4);
}

Form restrict_to_plane(const Form& b, const QMatrix& plane) {
  if (plane.rows() != b.nvars() || plane.cols() != 3 || rank(plane) != 3) {
    throw std::invalid_argument("restrict_to_plane: expected an injective linear map from the plane");
  }
  std::vector<Form> images;
  for (std::size_t i = 0; i < plane.rows(); ++i) images.push_back(Form::linear(3, plane.row(i)));
  return b.substitute(images);
}

std::array<Rational, 4> SurfaceFromPoints::map(const HomPoint& p) const {
  return {evaluate(mu[0], p), evaluate(mu[1], p), evaluate(mu[2], p), evaluate(mu[3], p)};
}

SurfaceFromPoints surface_from_6points(std::span<const HomPoint> six, std::uint64_t seed) {
  if (six.size() != 6) throw std::invalid_argument("surface_from_6points: expected six points");
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      for (std::size_t k = j + 1; k < 6; ++k)
        if (sgn(bracket(six[i], six[j], six[k])) == 0) {
          throw DegenerateInput("surface_from_6points: three collinear points");
        }
  if (sgn(veronese_det(six)) == 0) throw DegenerateInput("surface_from_6points: points on a conic");

  const auto cubic3 = monomials(3, 3);
  QMatrix ev(6, cubic3.size());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t c = 0; c < cubic3.size(); ++c) ev(i, c) = monomial_value(cubic3[c], six[i].span(), 3);
  const auto ker = kernel(ev);
  if (ker.size() != 4) throw DegenerateInput("surface_from_6points: cubics through the points are not 4-dimensional");
  std::array<Form, 4> mu;
  for (std::size_t k = 0; k < 4; ++k) mu[k] = form_from_coefficients(3, 3, ker[k]);

  const auto cubic4 = monomials(4, 3);
  Sampler sampler(seed);
  constexpr std::size_t kSamples = 25;
  for (int attempt = 0; attempt < 2; ++attempt) {
    QMatrix m(0, cubic4.size());
    while (m.rows() < kSamples) {
      const HomPoint p = sampler.point(20);
      const std::array<Rational, 4> img{evaluate(mu[0], p), evaluate(mu[1], p), evaluate(mu[2], p),
                                        evaluate(mu[3], p)};
      if (sgn(img[0]) == 0 && sgn(img[1]) == 0 && sgn(img[2]) == 0 && sgn(img[3]) == 0) continue;
      QVector row;
      for (const auto& e : cubic4) row.push_back(monomial_value(e, img, 4));
      m.append_row(row);
    }
    const auto sk = kernel(m);
    if (sk.size() == 1) {
      return {CubicSurface(form_from_coefficients(4, 3, sk[0])), mu, kSamples};
    }
  }
  throw DegenerateInput("surface_from_6points: interpolation kernel is not one-dimensional");
}

}  // namespace luroth
