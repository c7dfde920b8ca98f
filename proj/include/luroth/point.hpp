#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>

#include "luroth/exact/form.hpp"
#include "luroth/exact/rational.hpp"

namespace luroth {

/// Projective point with N rational coordinates, not all zero. Equality is
/// projective; `canonical()` scales the first nonzero coordinate to 1.
template <std::size_t N>
class ProjPoint {
 public:
  ProjPoint() = delete;
  explicit ProjPoint(const std::array<Rational, N>& coords) : coords_(coords) {
    for (const auto& c : coords_) {
      if (sgn(c) != 0) return;
    }
    throw std::invalid_argument("projective point with all coordinates zero");
  }
  template <typename... T>
    requires(sizeof...(T) == N)
  ProjPoint(const T&... coords) : ProjPoint(std::array<Rational, N>{Rational(coords)...}) {}

  const std::array<Rational, N>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> span() const { return coords_; }

  std::size_t first_nonzero() const {
    std::size_t i = 0;
    while (sgn(coords_[i]) == 0) ++i;
    return i;
  }

  ProjPoint canonical() const {
    const Rational s = coords_[first_nonzero()];
    std::array<Rational, N> c;
    for (std::size_t i = 0; i < N; ++i) c[i] = coords_[i] / s;
    return ProjPoint(c);
  }

  ProjPoint scaled(const Rational& lambda) const {
    std::array<Rational, N> c;
    for (std::size_t i = 0; i < N; ++i) c[i] = coords_[i] * lambda;
    return ProjPoint(c);
  }

  /// Projective equality: all 2x2 minors vanish.
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j)
        if (a.coords_[i] * b.coords_[j] != a.coords_[j] * b.coords_[i]) return false;
    return true;
  }

  /// Exact coordinate equality (no rescaling).
  bool identical(const ProjPoint& other) const { return coords_ == other.coords_; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < N; ++i) {
      if (i) s += ", ";
      s += luroth::to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  std::array<Rational, N> coords_;
};

using HomPoint = ProjPoint<3>;
using HomPoint4 = ProjPoint<4>;

/// Bracket |p q r|: determinant of the three coordinate rows.
Rational bracket(const HomPoint& p, const HomPoint& q, const HomPoint& r);

/// Line through two points as a coefficient vector (cross product).
std::array<Rational, 3> cross(std::span<const Rational> a, std::span<const Rational> b);

/// Evaluates a form at a point (arity must match).
template <std::size_t N>
Rational evaluate(const Form& f, const ProjPoint<N>& p) {
  return f.evaluate(p.span());
}

}  // namespace luroth
