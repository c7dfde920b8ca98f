#include "luroth/sampler.hpp"

#include <algorithm>

#include "luroth/pentalateral.hpp"

namespace luroth {

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::rational(long range, long den) {
  Rational r(integer(-range, range), integer(1, den));
  r.canonicalize();
  return r;
}

Rational Sampler::nonzero_rational(long range, long den) {
  for (;;) {
    Rational r = rational(range, den);
    if (sgn(r) != 0) return r;
  }
}

HomPoint Sampler::point(long range, long den) {
  for (;;) {
    std::array<Rational, 3> c{rational(range, den), rational(range, den), rational(range, den)};
    if (sgn(c[0]) != 0 || sgn(c[1]) != 0 || sgn(c[2]) != 0) return HomPoint(c);
  }
}

Form Sampler::form(std::size_t nvars, unsigned degree, long range) {
  Form f(nvars);
  for (const auto& e : monomials(nvars, degree)) f.add_term(e, integer(-range, range));
  return f;
}

QMatrix Sampler::matrix(std::size_t rows, std::size_t cols, long range, long den) {
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(range, den);
  return m;
}

QMatrix Sampler::skew_matrix(std::size_t n, long range, long den) {
  QMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = rational(range, den);
      m(c, r) = -m(r, c);
    }
  return m;
}

namespace {

bool three_collinear(std::span<const HomPoint> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (sgn(bracket(pts[i], pts[j], pts[k])) == 0) return true;
  return false;
}

}  // namespace

Config7 Sampler::generic_config7(long range) {
  for (;;) {
    std::array<HomPoint, 7> pts{point(range), point(range), point(range), point(range),
                                point(range), point(range), point(range)};
    if (three_collinear(pts)) continue;
    Config7 z(pts);
    if (z.pairwise_distinct() && !z.any_six_on_conic()) return z;
  }
}

Config7 Sampler::six_on_conic_config7(long range) {
  for (;;) {
    std::vector<long> ts;
    while (ts.size() < 6) {
      const long t = integer(-range, range);
      if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
    }
    std::vector<HomPoint> pts;
    for (long t : ts) pts.emplace_back(1, t, t * t);
    const HomPoint p7 = point(range);
    if (p7[0] * p7[2] == p7[1] * p7[1]) continue;
    pts.push_back(p7);
    for (std::size_t i = pts.size() - 1; i > 0; --i) {
      std::swap(pts[i], pts[static_cast<std::size_t>(integer(0, static_cast<long>(i)))]);
    }
    Config7 z = Config7::from_span(pts);
    if (z.pairwise_distinct() && !z.all_on_conic()) return z;
  }
}

PointConic Sampler::nonsingular_conic(long range) {
  for (;;) {
    PointConic c(form(3, 2, range));
    if (c.nonsingular()) return c;
  }
}

BatemanInput Sampler::bateman_input(long range) {
  PointConic theta = nonsingular_conic(range);
  for (;;) {
    Form d = form(3, 3, range);
    if (!d.is_zero()) return BatemanInput(theta, d);
  }
}

RobertsData Sampler::roberts_data(long range) {
  for (;;) {
    RobertsData r;
    for (auto& l : r.lines)
      for (auto& c : l) c = integer(-range, range);
    for (std::size_t k = 0; k < 4; ++k) {
      r.a[k] = nonzero_rational(range);
      r.b[k] = nonzero_rational(range);
    }
    try {
      r = normalize_roberts(r);
      const auto lq = luroth_closed_form(r);
      pentalateral_ops({r.lines[0], r.lines[1], r.lines[2], r.lines[3],
                        line_coefficients(lq.fifth_line)});
      reverse_roberts(r);
      return r;
    } catch (const DegenerateInput&) {
    }
  }
}

}  // namespace luroth
