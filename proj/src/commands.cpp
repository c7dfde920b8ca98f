#include "luroth/commands.hpp"

#include "luroth/bateman.hpp"
#include "luroth/pentalateral.hpp"
#include "luroth/suites.hpp"

namespace luroth {

namespace {

// S(X, X) as a form in X.
Form diagonal(const Form& s) {
  std::vector<Form> images;
  for (std::size_t k = 0; k < 6; ++k) images.push_back(Form::variable(3, k % 3));
  return s.substitute(images);
}

// S(xi, p) as a form in xi.
Form at_point(const Form& s, const HomPoint& p) {
  std::vector<Form> images;
  for (std::size_t k = 0; k < 3; ++k) images.push_back(Form::variable(3, k));
  for (std::size_t k = 0; k < 3; ++k) images.push_back(Form::constant(3, p[k]));
  return s.substitute(images);
}

}  // namespace

RunReport cmd_psi(const std::string& input_text) {
  RunReport report{"psi", sha256_hex(input_text), io::Json::object(), {}};
  const Config7 z = io::config7_from_json(io::parse(input_text));
  auto& out = report.outputs;
  out["points"] = io::to_json(z)["points"];
  out["pairwise_distinct"] = z.pairwise_distinct();
  out["all_on_conic"] = z.all_on_conic();
  io::Json six = io::Json::array();
  for (std::size_t i = 0; i < 7; ++i) six.push_back(z.six_on_conic(i));
  out["six_on_conic"] = six;

  const Rational fano = morley_invariant_fano(z.points());
  out["psi_fano"] = io::to_json(fano);
  out["lambda"] = io::to_json(fano_to_quotient_ratio());
  if (!z.pairwise_distinct()) {
    report.degenerate("configuration/pairwise-distinct");
    report.expect("psi-fano/coincident-points", sgn(fano) == 0, "psi_fano = " + to_string(fano));
    return report;
  }
  if (z.all_on_conic()) {
    report.degenerate("configuration/not-on-a-conic");
    return report;
  }
  std::optional<MorleyData> md;
  try {
    md = morley_data(z);
  } catch (const DegenerateInput&) {
    report.degenerate("morley/S");
    return report;
  }
  const MorleyData& d = *md;
  out["Q_values"] = io::to_json(d)["Q_values"];
  out["F"] = io::to_json(d.f);
  out["psi_quotient"] = d.psi ? io::to_json(*d.psi) : io::Json(nullptr);
  out["morley_S"] = io::to_json(d.s);
  out["morley_N"] = io::to_json(d.n.matrix());

  const Form diag = diagonal(d.s);
  report.expect("S/diagonal-vanishes", diag.is_zero(), diag.to_string());
  std::string nonzero;
  for (const auto& p : z.points())
    if (!at_point(d.s, p).is_zero()) nonzero += p.to_string();
  report.expect("S/vanishes-on-points", nonzero.empty(), "nonzero at " + nonzero);
  const Rational det = det_fraction_free(d.n.matrix());
  report.expect("N/pfaffian-squared-equals-det", d.f * d.f == det,
                to_string(d.f * d.f) + " vs " + to_string(det));
  if (d.psi) {
    const Rational want = fano_to_quotient_ratio() * *d.psi;
    report.expect("psi/two-routes-agree", fano == want, to_string(fano) + " vs " + to_string(want));
  } else {
    report.degenerate("psi/quotient-route");
    report.expect("F/vanishes-with-six-on-a-conic", sgn(d.f) == 0, "F = " + to_string(d.f));
  }
  return report;
}

RunReport cmd_luroth(const std::string& input_text) {
  RunReport report{"luroth", sha256_hex(input_text), io::Json::object(), {}};
  const RobertsData given = io::roberts_from_json(io::parse(input_text));
  auto& out = report.outputs;
  out["input"] = io::to_json(given);
  RobertsData r;
  try {
    r = given.normalized() ? given : normalize_roberts(given);
  } catch (const DegenerateInput& e) {
    out["reason"] = e.what();
    report.degenerate("roberts/general-lines");
    return report;
  }
  out["normalized_input"] = given.normalized();
  out["roberts"] = io::to_json(r);

  std::optional<BatemanInput> inp;
  try {
    inp = reverse_roberts(r);
  } catch (const DegenerateInput& e) {
    out["reason"] = e.what();
    report.degenerate("roberts/nonsingular-conic");
    return report;
  }
  out["theta"] = io::to_json(inp->theta.form());
  out["D"] = io::to_json(inp->d_cubic);
  const Form branch = branch_quartic(*inp);
  out["branch_quartic"] = io::to_json(branch);

  LurothQuartic lq;
  try {
    lq = luroth_closed_form(r);
  } catch (const DegenerateInput& e) {
    out["reason"] = e.what();
    report.degenerate("luroth/closed-form");
    return report;
  }
  out["quartic"] = io::to_json(lq.quartic);
  out["fifth_line"] = io::to_json(line_coefficients(lq.fifth_line));
  const auto factor = proportionality_factor(branch, lq.quartic);
  out["branch_factor"] = factor ? io::to_json(*factor) : io::Json(nullptr);
  report.expect("luroth/branch-proportional", factor.has_value(), "branch quartic is not a multiple of the quartic");

  std::array<LineCoeffs, 5> five{r.lines[0], r.lines[1], r.lines[2], r.lines[3], line_coefficients(lq.fifth_line)};
  std::optional<PentalateralData> p;
  try {
    p = pentalateral_ops(five);
  } catch (const DegenerateInput& e) {
    out["reason"] = e.what();
    report.degenerate("pentalateral/complete");
    return report;
  }
  io::Json lines = io::Json::array(), vertices = io::Json::array();
  for (const auto& l : five) lines.push_back(io::to_json(l));
  std::string off;
  for (const auto& v : p->pentalateral.vertices) {
    vertices.push_back(io::to_json(v));
    if (sgn(evaluate(lq.quartic, v)) != 0) off += v.to_string();
  }
  out["pentalateral"] = io::Json{{"lines", lines}, {"vertices", vertices}};
  report.expect("pentalateral/vertices-on-quartic", off.empty(), "off the quartic: " + off);

  const auto recovered = fifth_line(lq.quartic, r.lines);
  report.expect("pentalateral/fifth-line-recovered",
                proportionality_factor(Form::linear(3, recovered.line), lq.fifth_line).has_value(),
                "recovered " + Form::linear(3, recovered.line).to_string());
  const auto id = differential_identity(*inp);
  report.expect("bateman/differential-identity", id.holds(), id.residual.to_string());
  return report;
}

RunReport cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t count) {
  const std::string key = "suite=" + suite + ";seed=" + std::to_string(seed) + ";count=" + std::to_string(count);
  RunReport report{"verify", sha256_hex(key), io::Json::object(), {}};
  report.outputs["suite"] = suite;
  report.outputs["seed"] = seed;
  report.outputs["count"] = count;
  run_suite(suite, seed, count, report);
  return report;
}

RunReport cmd_verify_report(const std::string& report_text) {
  RunReport report{"verify-report", sha256_hex(report_text), io::Json::object(), {}};
  const io::Json j = io::parse(report_text);
  if (!j.is_object() || j.value("command", "") != "luroth" || !j.contains("outputs") ||
      !j["outputs"].is_object() || !j["outputs"].contains("input")) {
    throw io::InputError("expected a JSON report of the luroth command");
  }
  const io::Json& o = j["outputs"];
  const RunReport fresh = cmd_luroth(o["input"].dump());
  report.outputs["reproduced_digest"] = fresh.input_digest;
  if (!o.contains("quartic")) {
    report.expect("report/same-outcome", !fresh.outputs.contains("quartic"),
                  "recomputation produced a quartic the report lacks");
    report.degenerate("report/quartic");
    return report;
  }
  const Form quartic = io::form_from_json(o["quartic"], 3);
  const LineCoeffs fifth = io::line_from_json(o["fifth_line"]);
  const RobertsData r = io::roberts_from_json(o["roberts"]);
  report.expect("report/quartic-reproduced", fresh.outputs.value("quartic", io::Json()) == o["quartic"],
                "recomputed quartic differs");
  report.expect("report/fifth-line-reproduced", fresh.outputs.value("fifth_line", io::Json()) == o["fifth_line"],
                "recomputed fifth line differs");
  const auto closed = luroth_closed_form(r);
  report.expect("report/quartic-matches-roberts-data", closed.quartic == quartic,
                "quartic does not follow from the reported Roberts data");
  std::string off;
  if (o.contains("pentalateral")) {
    for (const auto& v : o["pentalateral"]["vertices"]) {
      const HomPoint p = io::point_from_json(v);
      if (sgn(evaluate(quartic, p)) != 0) off += p.to_string();
    }
  }
  report.expect("report/vertices-on-quartic", off.empty(), "off the quartic: " + off);
  const auto recovered = fifth_line(quartic, r.lines);
  report.expect("report/fifth-line-inscribed",
                proportionality_factor(Form::linear(3, recovered.line), Form::linear(3, fifth)).has_value(),
                "fifth line is not recovered from the quartic");
  for (const auto& c : fresh.checks) report.checks.push_back({"recomputed/" + c.name, c.status, c.residual});
  return report;
}

}  // namespace luroth
