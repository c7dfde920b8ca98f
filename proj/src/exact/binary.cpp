#include "luroth/exact/binary.hpp"

#include <stdexcept>

#include "luroth/exact/univariate.hpp"

namespace luroth {

namespace {

void require_binary(const Form& b) {
  if (b.nvars() != 2 || !b.is_homogeneous()) {
    throw std::invalid_argument("expected a homogeneous binary form");
  }
}

// u(x) = b(x, 1) together with the multiplicity of the root (1 : 0).
struct Dehomogenized {
  UPoly u;
  int degree = 0;
  int at_infinity = 0;
};

Dehomogenized dehomogenize(const Form& b) {
  Dehomogenized out;
  out.degree = b.degree();
  const auto c = binary_coefficients(b);
  out.u.assign(c.rbegin(), c.rend());  // c[k] multiplies x^(d-k)
  upoly::trim(out.u);
  out.at_infinity = out.degree - upoly::degree(out.u);
  return out;
}

Form homogenize(const UPoly& u, int degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (std::size_t k = 0; k < u.size(); ++k) c[static_cast<std::size_t>(degree) - k] = u[k];
  return binary_from_coefficients(c);
}

}  // namespace

std::vector<Rational> binary_coefficients(const Form& b) {
  require_binary(b);
  if (b.is_zero()) return {};
  const int d = b.degree();
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) c[k] = b.coefficient(make_exponent({unsigned(d - k), unsigned(k)}));
  return c;
}

Form binary_from_coefficients(const std::vector<Rational>& c) {
  Form b(2);
  if (c.empty()) return b;
  const unsigned d = static_cast<unsigned>(c.size() - 1);
  for (unsigned k = 0; k <= d; ++k) b.add_term(make_exponent({d - k, k}), c[k]);
  return b;
}

std::vector<BinaryRoot> binary_rational_roots(const Form& b) {
  require_binary(b);
  if (b.is_zero()) throw std::invalid_argument("roots of the zero binary form");
  const auto dh = dehomogenize(b);
  std::vector<BinaryRoot> roots;
  for (const auto& x : upoly::rational_roots(dh.u)) roots.push_back({x, 1});
  if (dh.at_infinity > 0) roots.push_back({1, 0});
  return roots;
}

Form divide_by_root(const Form& b, const BinaryRoot& root) {
  auto c = binary_coefficients(b);
  if (c.size() < 2) throw std::domain_error("divide_by_root: degree < 1");
  const std::size_t d = c.size() - 1;
  std::vector<Rational> q(d);
  if (sgn(root.t1) == 0) {
    // divide by t1
    if (sgn(c[0]) != 0) throw std::domain_error("divide_by_root: (1:0) is not a root");
    for (std::size_t k = 0; k < d; ++k) q[k] = c[k + 1];
  } else {
    // divide by t0 - x t1
    const Rational x = root.t0 / root.t1;
    q[0] = c[0];
    for (std::size_t k = 1; k < d; ++k) q[k] = c[k] + x * q[k - 1];
    if (sgn(c[d] + x * q[d - 1]) != 0) throw std::domain_error("divide_by_root: not a root");
  }
  return binary_from_coefficients(q);
}

std::optional<Form> binary_square_root(const Form& b) {
  require_binary(b);
  if (b.is_zero()) return Form(2);
  const auto dh = dehomogenize(b);
  if (dh.degree % 2 != 0 || dh.at_infinity % 2 != 0) return std::nullopt;
  const UPoly& u = dh.u;
  const int n = upoly::degree(u) / 2;
  const auto lead = rational_sqrt(u.back());
  if (!lead) return std::nullopt;
  UPoly s(static_cast<std::size_t>(n) + 1);
  s[n] = *lead;
  for (int k = n - 1; k >= 0; --k) {
    Rational acc = u[n + k];
    for (int i = k + 1; i < n; ++i) {
      const int j = n + k - i;
      if (j > k && j < n) acc -= s[i] * s[j];
    }
    s[k] = acc / (2 * s[n]);
  }
  if (upoly::multiply(s, s) != u) return std::nullopt;
  Form root = homogenize(s, dh.degree / 2 - dh.at_infinity / 2);
  root *= Form::variable(2, 1).pow(static_cast<unsigned>(dh.at_infinity / 2));
  return root;
}

std::optional<Form> binary_square_test(const Form& b) {
  require_binary(b);
  if (!b.is_zero() && b.degree() != 4) throw std::invalid_argument("expected a binary quartic");
  return binary_square_root(b);
}

Form binary_gcd(const Form& a, const Form& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto da = dehomogenize(a);
  const auto db = dehomogenize(b);
  const UPoly g = upoly::gcd(da.u, db.u);
  const int inf = std::min(da.at_infinity, db.at_infinity);
  Form out = homogenize(g, upoly::degree(g));
  out *= Form::variable(2, 1).pow(static_cast<unsigned>(inf));
  return out;
}

}  // namespace luroth
