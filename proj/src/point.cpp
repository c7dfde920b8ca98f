#include "luroth/point.hpp"

namespace luroth {

Rational bracket(const HomPoint& p, const HomPoint& q, const HomPoint& r) {
  return p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
         p[2] * (q[0] * r[1] - q[1] * r[0]);
}

std::array<Rational, 3> cross(std::span<const Rational> a, std::span<const Rational> b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace luroth
