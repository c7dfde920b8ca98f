#include "luroth/exact/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace luroth {
namespace upoly {

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Rational evaluate(const UPoly& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  trim(d);
  return d;
}

UPoly multiply(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  UPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  UPoly q(r.size() - b.size() + 1);
  const Rational lead = b.back();
  for (int k = static_cast<int>(r.size()) - static_cast<int>(b.size()); k >= 0; --k) {
    const Rational c = r[k + b.size() - 1] / lead;
    q[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

UPoly squarefree_part(const UPoly& p) {
  if (degree(p) <= 0) return p;
  const UPoly g = gcd(p, derivative(p));
  return divmod(p, g).first;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  UPoly out;
  UPoly basis{Rational(1)};
  for (std::size_t i = 0; i < n; ++i) {
    if (out.size() < basis.size()) out.resize(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] += dd[i] * basis[k];
    basis = multiply(basis, UPoly{-xs[i], Rational(1)});
  }
  trim(out);
  return out;
}

namespace {

using Sturm = std::vector<UPoly>;

Sturm sturm_sequence(const UPoly& p) {
  Sturm s{p, derivative(p)};
  while (degree(s.back()) > 0) {
    UPoly r = divmod(s[s.size() - 2], s.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    s.push_back(std::move(r));
  }
  return s;
}

int sign_changes(const Sturm& s, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : s) {
    const int v = sgn(evaluate(q, x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

Rational floor_of(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(f);
}

// Rational of smallest denominator in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  const Rational fl = floor_of(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl));
}

}  // namespace

// Real roots are isolated by Sturm bisection until each enclosing interval is
// narrower than 1/a_n^2; a rational root has denominator dividing a_n, so it is
// then the simplest rational of its interval.
std::vector<Rational> rational_roots(const UPoly& input) {
  UPoly p = input;
  trim(p);
  if (p.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  if (degree(p) == 0) return roots;
  p = squarefree_part(p);
  if (sgn(p.front()) == 0) {
    roots.push_back(0);
    std::size_t z = 0;
    while (sgn(p[z]) == 0) ++z;
    p.erase(p.begin(), p.begin() + static_cast<long>(z));
  }
  if (degree(p) >= 1) {
    const Integer den = common_denominator(p);
    for (auto& c : p) c *= den;
    const Rational lead = abs(p.back());
    const Rational width = 1 / (2 * lead * lead);
    Rational bound = 0;
    for (const auto& c : p) bound = std::max(bound, Rational(abs(c) / lead));
    bound += 1;
    const Sturm s = sturm_sequence(p);
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      const int count = sign_changes(s, lo) - sign_changes(s, hi);
      if (count == 0) continue;
      if (count == 1 && hi - lo < width) {
        const Rational x = simplest_between(lo, hi);
        if (sgn(evaluate(p, x)) == 0) roots.push_back(x);
        continue;
      }
      const Rational mid = (lo + hi) / 2;
      stack.emplace_back(lo, mid);
      stack.emplace_back(mid, hi);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace upoly

}  // namespace luroth
