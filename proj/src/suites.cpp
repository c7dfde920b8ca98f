#include "luroth/suites.hpp"

#include <functional>
#include <map>

#include "luroth/bateman.hpp"
#include "luroth/cubic_surface.hpp"
#include "luroth/pentalateral.hpp"
#include "luroth/sampler.hpp"

namespace luroth {

namespace {

using Suite = std::function<void(Sampler&, std::size_t, RunReport&)>;

std::string tag(const std::string& suite, std::size_t i, const std::string& what) {
  return suite + "/" + std::to_string(i) + "/" + what;
}

std::string pair_text(const Rational& got, const Rational& want) {
  return "got " + to_string(got) + ", expected " + to_string(want);
}

Rational product(const std::array<Rational, 7>& q) {
  Rational p = 1;
  for (const auto& v : q) p *= v;
  return p;
}

void differential_identity_case(Sampler& s, std::size_t i, RunReport& r) {
  if (i == 0) {
    const auto sym = differential_identity_symbolic(s.nonsingular_conic());
    r.expect(tag("differential-identity", i, "symbolic-cubic"), sym.holds(), sym.residual.to_string());
  }
  const auto id = differential_identity(s.bateman_input());
  r.expect(tag("differential-identity", i, "residual"), id.holds(), id.residual.to_string());
}

void homogeneity_case(Sampler& s, std::size_t i, RunReport& r) {
  const Config7 z = s.generic_config7();
  const Rational lambda = s.nonzero_rational(9, 5);
  const auto k = static_cast<std::size_t>(s.integer(0, 6));
  const Config7 w = z.with_point(k, z[k].scaled(lambda));

  const auto q = q_values(z), qw = q_values(w);
  bool q_ok = true;
  for (std::size_t j = 0; j < 7; ++j) q_ok = q_ok && qw[j] == (j == k ? q[j] : q[j] * power(lambda, 2));
  r.expect(tag("homogeneity", i, "Q-degree-2"), q_ok, "Q values do not scale by lambda^2");

  const Form sz = morley_S(z), sw = morley_S(w);
  r.expect(tag("homogeneity", i, "S-degree-5"), sw == sz * power(lambda, 5),
           "S coefficients do not scale by lambda^5");
  const Rational f = morley_pfaffian(z), fw = morley_pfaffian(w);
  r.expect(tag("homogeneity", i, "F-degree-15"), fw == f * power(lambda, 15), pair_text(fw, f * power(lambda, 15)));
  const Rational psi = morley_invariant(z), psiw = morley_invariant(w);
  r.expect(tag("homogeneity", i, "psi-degree-3"), psiw == psi * power(lambda, 3),
           pair_text(psiw, psi * power(lambda, 3)));
}

void symmetry_case(Sampler& s, std::size_t i, RunReport& r) {
  const Config7 z = s.generic_config7();
  const auto a = static_cast<std::size_t>(s.integer(0, 6));
  auto b = static_cast<std::size_t>(s.integer(0, 5));
  if (b >= a) ++b;
  const Config7 w = z.swapped(a, b);
  const auto dz = morley_data(z), dw = morley_data(w);
  r.expect(tag("symmetry", i, "F-invariant"), dz.f == dw.f, pair_text(dw.f, dz.f));
  r.expect(tag("symmetry", i, "Q-product-alternates"), product(dw.q_values) == -product(dz.q_values),
           pair_text(product(dw.q_values), -product(dz.q_values)));
  r.expect(tag("symmetry", i, "psi-alternates"), *dw.psi == -*dz.psi, pair_text(*dw.psi, -*dz.psi));
}

void nonvanishing_case(Sampler& s, std::size_t i, RunReport& r) {
  const Rational psi = morley_invariant(s.generic_config7());
  r.expect(tag("generic-nonvanishing", i, "psi-nonzero"), sgn(psi) != 0, "psi = 0");
}

void six_on_conic_case(Sampler& s, std::size_t i, RunReport& r) {
  const Config7 z = s.six_on_conic_config7();
  std::size_t off = 7;
  for (std::size_t k = 0; k < 7; ++k)
    if (z[k][0] * z[k][2] != z[k][1] * z[k][1]) off = k;
  const auto d = morley_data(z);
  r.expect(tag("six-on-conic", i, "F-vanishes"), sgn(d.f) == 0, "F = " + to_string(d.f));
  r.expect(tag("six-on-conic", i, "Q-factor-vanishes"), sgn(d.q_values[off]) == 0,
           "Q = " + to_string(d.q_values[off]));
  const Rational fano = morley_invariant_fano(z.points());
  r.expect(tag("six-on-conic", i, "psi-fano-nonzero"), sgn(fano) != 0, "psi_fano = 0");
}

void two_route_case(Sampler& s, std::size_t i, RunReport& r) {
  const Config7 z = s.generic_config7();
  const Rational psi = morley_invariant(z);
  const Rational fano = morley_invariant_fano(z.points());
  r.expect(tag("two-route", i, "fano-equals-lambda-quotient"), fano == fano_to_quotient_ratio() * psi,
           pair_text(fano, fano_to_quotient_ratio() * psi));
}

void bateman_points_case(Sampler& s, std::size_t i, RunReport& r) {
  const long m = s.integer(1, 9), n = s.integer(1, 9);
  const Form x0 = Form::variable(3, 0), x1 = Form::variable(3, 1), x2 = Form::variable(3, 2);
  const BatemanInput inp(PointConic(x0 * x0 + x1 * x1 * Rational(m * m) + x2 * x2 * Rational(n * n)), x0 * x1 * x2);
  const std::string name = "bateman-points[m=" + std::to_string(m) + ",n=" + std::to_string(n) + "]";
  const Config7 z = bateman_points(inp);
  const std::vector<HomPoint> expected{HomPoint(1, 0, 0),      HomPoint(0, 1, 0),       HomPoint(0, 0, 1),
                                       HomPoint(m * n, n, m),  HomPoint(m * n, -n, m),  HomPoint(m * n, n, -m),
                                       HomPoint(m * n, -n, -m)};
  bool all = true;
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& p : z.points()) found = found || p == e;
    all = all && found;
  }
  r.expect(tag(name, i, "points"), all, "unexpected common zeros");
  bool no_six = true;
  for (const auto& q : q_values(z)) no_six = no_six && sgn(q) != 0;
  r.expect(tag(name, i, "no-six-on-conic"), no_six, "some Q value vanishes");
  const auto d = morley_data(z);
  r.expect(tag(name, i, "F-vanishes"), sgn(d.f) == 0, "F = " + to_string(d.f));
  r.expect(tag(name, i, "psi-vanishes"), d.psi && sgn(*d.psi) == 0, d.psi ? to_string(*d.psi) : "undefined");
}

void luroth_case(Sampler& s, std::size_t i, RunReport& r) {
  const RobertsData data = s.roberts_data();
  const auto lq = luroth_closed_form(data);
  const Form branch = branch_quartic(reverse_roberts(data));
  r.expect(tag("luroth", i, "branch-proportional"), proportionality_factor(branch, lq.quartic).has_value(),
           "branch quartic " + branch.to_string() + " vs closed form " + lq.quartic.to_string());
  const LineCoeffs fifth = line_coefficients(lq.fifth_line);
  const auto p = pentalateral_ops({data.lines[0], data.lines[1], data.lines[2], data.lines[3], fifth});
  std::string missing;
  for (const auto& v : p.pentalateral.vertices)
    if (sgn(evaluate(lq.quartic, v)) != 0) missing += v.to_string();
  r.expect(tag("luroth", i, "vertices-on-quartic"), missing.empty(), "off the quartic: " + missing);
  const auto recovered = fifth_line(lq.quartic, data.lines);
  r.expect(tag("luroth", i, "fifth-line-recovered"),
           proportionality_factor(Form::linear(3, recovered.line), lq.fifth_line).has_value(),
           "recovered " + Form::linear(3, recovered.line).to_string());
}

void roberts_case(Sampler& s, std::size_t i, RunReport& r) {
  const RobertsData data = s.roberts_data();
  const BatemanInput inp = reverse_roberts(data);
  const auto pencil = roberts_pencil(inp);
  bool apolar = true;
  for (const auto& member : pencil) {
    apolar = apolar && apolarity_pair(member.form(), inp.theta.form()).is_zero() &&
             apolarity_pair(member.form(), inp.d_cubic).is_zero();
  }
  r.expect(tag("roberts", i, "pencil-apolar"), apolar, "pencil member not apolar");
  const auto dec = roberts_decompose(inp);
  if (!dec.data) {
    r.fail(tag("roberts", i, "round-trip"), dec.failure);
    return;
  }
  r.expect(tag("roberts", i, "round-trip"), roberts_match(data, *dec.data).has_value(),
           "recovered " + io::to_json(*dec.data).dump());
}

void cone_case(Sampler& s, std::size_t i, RunReport& r) {
  Form fermat(4);
  for (std::size_t k = 0; k < 4; ++k) fermat += Form::variable(4, k).pow(3);
  const CubicSurface surface(fermat);
  std::array<Rational, 4> c{1, -1, s.rational(9, 4), 0};
  c[3] = -c[2];
  for (std::size_t k = 3; k > 0; --k) std::swap(c[k], c[static_cast<std::size_t>(s.integer(0, static_cast<long>(k)))]);
  const HomPoint4 z(c);
  const Form b = branch_cone(surface, z);
  std::vector<Form> shifted;
  for (std::size_t k = 0; k < 4; ++k) shifted.push_back(Form::variable(5, 4) * z[k] + Form::variable(5, k));
  const Form diff = b.substitute(shifted) - b.embed(5);
  r.expect(tag("cone", i, "cone-law[" + z.to_string() + "]"), diff.is_zero(), diff.to_string());
  r.expect(tag("cone", i, "vertex-on-cone"), sgn(evaluate(b, z)) == 0, to_string(evaluate(b, z)));
}

void infrastructure_case(Sampler& s, std::size_t i, RunReport& r) {
  const std::size_t n = 2 * static_cast<std::size_t>(s.integer(1, 4));
  const QMatrix m = s.skew_matrix(n, 9, 3);
  const Rational pf = pfaffian(m), det = det_fraction_free(m);
  r.expect(tag("infrastructure", i, "pfaffian-squared"), pf * pf == det, pair_text(pf * pf, det));
  const auto rows = static_cast<std::size_t>(s.integer(1, 6)), cols = static_cast<std::size_t>(s.integer(1, 8));
  const auto inner = static_cast<std::size_t>(s.integer(1, 5));
  const QMatrix a = s.matrix(rows, inner) * s.matrix(inner, cols);
  const auto ker = kernel(a);
  bool zero = ker.size() + rank(a) == cols;
  for (const auto& v : ker)
    for (const auto& x : a * v) zero = zero && sgn(x) == 0;
  r.expect(tag("infrastructure", i, "kernel-annihilates"), zero, "kernel vector not annihilated");
}

void seventh_cubic_case(Sampler& s, std::size_t i, RunReport& r) {
  const Config7 z = s.generic_config7();
  const std::vector<HomPoint> six(z.points().begin(), z.points().begin() + 6);
  const Form e = seventh_cubic(six);
  bool through = true;
  for (const auto& p : six) through = through && sgn(evaluate(e, p)) == 0;
  r.expect(tag("seventh-cubic", i, "contains-points"), through, e.to_string());
  std::string bad;
  for (const auto& q : sixth_points(six)) {
    if (!q.point) {
      bad += q.error + "; ";
    } else if (sgn(evaluate(e, *q.point)) != 0) {
      bad += q.point->to_string();
    }
  }
  r.expect(tag("seventh-cubic", i, "contains-sixth-points"), bad.empty(), bad);
}

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> suites{
      {"differential-identity", differential_identity_case},
      {"homogeneity", homogeneity_case},
      {"symmetry", symmetry_case},
      {"generic-nonvanishing", nonvanishing_case},
      {"six-on-conic", six_on_conic_case},
      {"two-route", two_route_case},
      {"bateman-points", bateman_points_case},
      {"luroth", luroth_case},
      {"roberts", roberts_case},
      {"cone", cone_case},
      {"infrastructure", infrastructure_case},
      {"seventh-cubic", seventh_cubic_case},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

void run_suite(const std::string& name, std::uint64_t seed, std::size_t count, RunReport& report) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw io::InputError("unknown suite: " + name);
  Sampler sampler(seed);
  for (std::size_t i = 0; i < count; ++i) {
    try {
      it->second(sampler, i, report);
    } catch (const std::exception& e) {
      report.fail(tag(name, i, "exception"), e.what());
    }
  }
}

}  // namespace luroth
