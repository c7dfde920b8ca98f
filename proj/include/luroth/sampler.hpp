#pragma once

#include <cstdint>
#include <random>

#include "luroth/config7.hpp"
#include "luroth/roberts.hpp"

namespace luroth {

/// Seeded source of random exact objects. The draws depend only on the seed
/// (no library distributions are used), so they agree across platforms.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// p / q with |p| <= range and 1 <= q <= den.
  Rational rational(long range = 9, long den = 1);
  Rational nonzero_rational(long range = 9, long den = 1);
  HomPoint point(long range = 9, long den = 1);
  Form form(std::size_t nvars, unsigned degree, long range = 9);
  QMatrix matrix(std::size_t rows, std::size_t cols, long range = 9, long den = 1);
  QMatrix skew_matrix(std::size_t n, long range = 9, long den = 1);

  /// Distinct points, no six on a conic, no three collinear.
  Config7 generic_config7(long range = 9);
  /// Six points (1, t, t^2) on X0 X2 = X1^2 and a seventh off the conic,
  /// in a random label order.
  Config7 six_on_conic_config7(long range = 9);
  PointConic nonsingular_conic(long range = 9);
  BatemanInput bateman_input(long range = 9);
  /// Normalized data with general lines, nonzero b, sum a/b != 0, nonzero
  /// fifth line and nonsingular theta.
  RobertsData roberts_data(long range = 9);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace luroth
