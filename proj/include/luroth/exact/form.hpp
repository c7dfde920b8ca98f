#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "luroth/exact/rational.hpp"

namespace luroth {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector; only the first `nvars` entries of the owning Form are used,
/// the rest stay zero.
using Exponent = std::array<std::uint8_t, kMaxVars>;

/// Sparse multivariate polynomial over Rational in a fixed number of variables.
///
/// Variable conventions used across the library:
///   3 variables  -> X0, X1, X2 (or dual operators d0, d1, d2 for line curves)
///   6 variables  -> xi0, xi1, xi2, X0, X1, X2 (bihomogeneous forms)
///   4 variables  -> X0..X3 (cubic surfaces)
///   2 variables  -> t0, t1 (binary forms)
/// Zero coefficients are never stored.
class Form {
 public:
  using Terms = std::map<Exponent, Rational>;

  Form() = default;
  explicit Form(std::size_t nvars);

  static Form constant(std::size_t nvars, const Rational& c);
  static Form variable(std::size_t nvars, std::size_t index);
  static Form monomial(std::size_t nvars, const Exponent& e, const Rational& c);
  /// sum_i coeffs[i] * X_{offset+i}
  static Form linear(std::size_t nvars, std::span<const Rational> coeffs,
                     std::size_t offset = 0);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  /// Maximal total degree; -1 for the zero form.
  int degree() const;
  bool is_homogeneous() const;
  /// Common degree of every term in variables [first, first+count), or -1
  /// if the terms disagree (or the form is zero).
  int block_degree(std::size_t first, std::size_t count) const;

  Form derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces variable i by images[i]; all images share one arity.
  Form substitute(std::span<const Form> images) const;
  /// Same polynomial viewed in a larger (or equal) variable set, variable i
  /// mapped to variable offset+i.
  Form embed(std::size_t nvars, std::size_t offset = 0) const;

  Form operator-() const;
  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(const Form& other);
  Form& operator*=(const Rational& c);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Form& a, const Form& b);
  friend Form operator*(Form a, const Rational& c) { return a *= c; }
  friend Form operator*(const Rational& c, Form a) { return a *= c; }
  friend bool operator==(const Form& a, const Form& b) = default;

  Form pow(unsigned exponent) const;

  /// Human-readable rendering with the given variable names.
  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  void check_same_arity(const Form& other) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// All exponent vectors of the given total degree in `nvars` variables, in
/// lexicographically descending order, e.g. for (3, 2):
/// X0^2, X0X1, X0X2, X1^2, X1X2, X2^2.
std::vector<Exponent> monomials(std::size_t nvars, unsigned degree);

/// Exponent vector with the first entries taken from `values`.
Exponent make_exponent(std::initializer_list<unsigned> values);

/// Value of the monomial x^e at a point.
Rational monomial_value(const Exponent& e, std::span<const Rational> point,
                        std::size_t nvars);

/// Coefficients of a homogeneous form on the descending-lex monomial basis.
std::vector<Rational> coefficient_vector(const Form& f, unsigned degree);
Form form_from_coefficients(std::size_t nvars, unsigned degree,
                            std::span<const Rational> coeffs);

/// c such that a = c * b, when the two forms are proportional with a nonzero
/// factor; nullopt otherwise (including when either side is zero).
std::optional<Rational> proportionality_factor(const Form& a, const Form& b);

/// 3x3 determinant of a matrix of forms (row-major).
Form det3(const std::array<Form, 9>& m);

}  // namespace luroth
