#include "luroth/exact/form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace luroth {

namespace {

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

void check_arity(std::size_t nvars) {
  if (nvars > kMaxVars) {
    throw std::invalid_argument("Form supports at most 16 variables");
  }
}

}  // namespace

Form::Form(std::size_t nvars) : nvars_(nvars) { check_arity(nvars); }

Form Form::constant(std::size_t nvars, const Rational& c) {
  Form f(nvars);
  f.add_term(Exponent{}, c);
  return f;
}

Form Form::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index");
  Form f(nvars);
  Exponent e{};
  e[index] = 1;
  f.add_term(e, 1);
  return f;
}

Form Form::monomial(std::size_t nvars, const Exponent& e, const Rational& c) {
  Form f(nvars);
  f.add_term(e, c);
  return f;
}

Form Form::linear(std::size_t nvars, std::span<const Rational> coeffs, std::size_t offset) {
  if (offset + coeffs.size() > nvars) throw std::out_of_range("linear form arity");
  Form f(nvars);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e{};
    e[offset + i] = 1;
    f.add_term(e, coeffs[i]);
  }
  return f;
}

Rational Form::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Form::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool Form::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return total_degree(t.first) == d; });
}

int Form::block_degree(std::size_t first, std::size_t count) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int k = 0;
    for (std::size_t i = first; i < first + count; ++i) k += e[i];
    if (d >= 0 && k != d) return -1;
    d = k;
  }
  return d;
}

Form Form::derivative(std::size_t var) const {
  Form out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    out.terms_.emplace(d, c * e[var]);
  }
  return out;
}

Rational Form::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluate: arity mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * monomial_value(e, point, nvars_);
  return sum;
}

Form Form::substitute(std::span<const Form> images) const {
  if (images.size() != nvars_) throw std::invalid_argument("substitute: arity mismatch");
  if (images.empty()) return *this;
  const std::size_t target = images.front().nvars();
  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<Form>> powers(nvars_);
  auto pow_of = [&](std::size_t i, unsigned k) -> const Form& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Form::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Form out(target);
  for (const auto& [e, c] : terms_) {
    Form term = Form::constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term *= pow_of(i, e[i]);
    }
    out += term;
  }
  return out;
}

Form Form::embed(std::size_t nvars, std::size_t offset) const {
  if (offset + nvars_ > nvars) throw std::invalid_argument("embed: target too small");
  Form out(nvars);
  for (const auto& [e, c] : terms_) {
    Exponent m{};
    for (std::size_t i = 0; i < nvars_; ++i) m[offset + i] = e[i];
    out.terms_.emplace(m, c);
  }
  return out;
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

void Form::check_same_arity(const Form& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("Form arity mismatch");
}

Form& Form::operator+=(const Form& other) {
  check_same_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Form& Form::operator-=(const Form& other) {
  check_same_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Form operator*(const Form& a, const Form& b) {
  a.check_same_arity(b);
  Form out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Form& Form::operator*=(const Form& other) {
  *this = *this * other;
  return *this;
}

Form& Form::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Form Form::pow(unsigned exponent) const {
  Form out = Form::constant(nvars_, 1);
  for (unsigned k = 0; k < exponent; ++k) out *= *this;
  return out;
}

std::string Form::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool has_var = std::any_of(e.begin(), e.begin() + nvars_, [](auto v) { return v != 0; });
    if (!has_var || mag != 1) {
      os << luroth::to_string(mag);
      if (has_var) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
    }
  }
  return os.str();
}

std::string Form::to_string() const {
  std::vector<std::string> names;
  if (nvars_ == 6) {
    names = {"xi0", "xi1", "xi2", "X0", "X1", "X2"};
  } else if (nvars_ == 2) {
    names = {"t0", "t1"};
  } else {
    for (std::size_t i = 0; i < nvars_; ++i) names.push_back("X" + std::to_string(i));
  }
  return to_string(names);
}

std::vector<Exponent> monomials(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  Exponent e{};
  // Recursive fill in descending lex order.
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == nvars) {
      e[var] = static_cast<std::uint8_t>(remaining);
      out.push_back(e);
      return;
    }
    for (int k = static_cast<int>(remaining); k >= 0; --k) {
      e[var] = static_cast<std::uint8_t>(k);
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

Exponent make_exponent(std::initializer_list<unsigned> values) {
  Exponent e{};
  std::size_t i = 0;
  for (auto v : values) e[i++] = static_cast<std::uint8_t>(v);
  return e;
}

Rational monomial_value(const Exponent& e, std::span<const Rational> point,
                        std::size_t nvars) {
  Rational v = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (e[i] != 0) v *= power(point[i], e[i]);
  }
  return v;
}

std::vector<Rational> coefficient_vector(const Form& f, unsigned degree) {
  if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != static_cast<int>(degree))) {
    throw std::invalid_argument("coefficient_vector: form is not homogeneous of the given degree");
  }
  std::vector<Rational> out;
  for (const auto& e : monomials(f.nvars(), degree)) out.push_back(f.coefficient(e));
  return out;
}

Form form_from_coefficients(std::size_t nvars, unsigned degree,
                            std::span<const Rational> coeffs) {
  const auto basis = monomials(nvars, degree);
  if (coeffs.size() != basis.size()) {
    throw std::invalid_argument("form_from_coefficients: wrong coefficient count");
  }
  Form f(nvars);
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coeffs[i]);
  return f;
}

std::optional<Rational> proportionality_factor(const Form& a, const Form& b) {
  if (a.is_zero() || b.is_zero() || a.nvars() != b.nvars() || a.size() != b.size()) {
    return std::nullopt;
  }
  const auto& [e0, c0] = *b.terms().begin();
  const Rational factor = a.coefficient(e0) / c0;
  if (sgn(factor) == 0) return std::nullopt;
  return a == b * factor ? std::optional<Rational>(factor) : std::nullopt;
}

Form det3(const std::array<Form, 9>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

}  // namespace luroth
