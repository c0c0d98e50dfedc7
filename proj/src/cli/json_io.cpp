#include "okaforge/cli/json_io.hpp"

#include <algorithm>

#include "okaforge/cli/expression.hpp"
#include "okaforge/error.hpp"

namespace okaforge::cli {

namespace {

int decimal_digits(mpfr_prec_t prec) {
  return std::clamp(static_cast<int>(static_cast<double>(prec) * 0.30103), 17, 40);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(ErrorCode::ParseError, std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string text_of(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, "expected a string, got " + j.dump());
  return j.get<std::string>();
}

}  // namespace

Json to_json(const GaussianRational& z) {
  return Json{{"re", rational_to_string(z.re())}, {"im", rational_to_string(z.im())}};
}

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const RationalFunction& f) {
  return Json{{"text", f.to_string()}, {"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Json to_json(const FactoredRational& g) {
  Json factors = Json::array();
  for (const auto& f : g.factors()) factors.push_back(Json{{"root", to_json(f.root)}, {"multiplicity", f.multiplicity}});
  return Json{{"kind", "factored"}, {"text", g.to_string()}, {"scale", to_json(g.scale())}, {"factors", factors}};
}

Json to_json(const MapPair& m) {
  Json second;
  if (m.has_exp_second()) {
    const Scalar& l = m.exp_linear().lambda;
    second = Json{{"kind", "exp"}, {"lambda", to_json(l.coeff)}, {"pi_power", l.pi_power}};
  } else {
    second = to_json(m.factored());
  }
  return Json{{"text", m.to_string()}, {"first", to_json(m.first)}, {"second", second}};
}

Json to_json(const WindingClass& w) {
  return Json{{"puncture_windings", w.puncture_windings}, {"hole_windings", w.hole_windings}};
}

Json to_json(const Certificate& c) {
  Json out{{"kind", to_string(c.kind)}, {"verdict", to_string(c.verdict)}};
  if (c.guard) out["guard"] = to_string(*c.guard);
  Json ws = Json::array();
  for (const auto& w : c.witnesses) {
    Json item{{"label", w.label}};
    if (w.point) item["point"] = to_json(*w.point);
    if (!w.detail.empty()) item["detail"] = w.detail;
    ws.push_back(item);
  }
  out["witnesses"] = ws;
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Json to_json(const numeric::BigFloat& x) {
  return Json{{"value", x.to_string(decimal_digits(x.prec()))}, {"precision", x.prec()}};
}

Json to_json(const numeric::BigComplex& z) {
  int digits = decimal_digits(z.prec());
  return Json{{"re", z.re.to_string(digits)}, {"im", z.im.to_string(digits)}, {"precision", z.prec()}};
}

Json to_json(const DoublePointReport& r) {
  Json out{{"finiteness", to_string(r.finiteness)}};
  if (r.finiteness == Finiteness::CountableTruncated) out["truncation"] = r.truncation;
  out["pair_count"] = r.pairs.size();
  if (!r.pairs.empty()) {
    numeric::BigFloat worst = r.pairs.front().residual;
    for (const auto& p : r.pairs) worst = numeric::max(worst, p.residual);
    out["max_residual"] = to_json(worst);
  }
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json item{{"x", to_json(p.x)}, {"y", to_json(p.y)}, {"residual", to_json(p.residual)}, {"radius", to_json(p.radius)}};
    if (p.k) item["k"] = *p.k;
    pairs.push_back(item);
  }
  out["pairs"] = pairs;
  Json excluded = Json::array();
  for (const auto& e : r.excluded) {
    Json item{{"x", to_json(e.x)}, {"y", to_json(e.y)}, {"reason", e.reason}};
    if (e.k) item["k"] = *e.k;
    excluded.push_back(item);
  }
  out["excluded"] = excluded;
  if (r.witness) out["witness"] = r.witness->to_string();
  if (r.elimination) out["elimination"] = r.elimination->to_string("x");
  return out;
}

Json to_json(const ProjectionCertificate& c) {
  Json out{{"flavor", to_string(c.flavor)}, {"pattern", to_string(c.pattern)}, {"verdict", to_string(c.verdict)}};
  if (!c.theta.empty()) {
    Json theta = Json::array();
    for (const auto& u : c.theta) theta.push_back(to_json(u));
    out["theta"] = theta;
  }
  if (c.d) out["d"] = to_json(*c.d);
  Json pairs = Json::array();
  for (const auto& p : c.pairs) pairs.push_back(Json{{"i", p.i}, {"j", p.j}, {"value", rational_to_string(p.value)}});
  out["pairs"] = pairs;
  Json escape = Json::array();
  for (const auto& e : c.escape) escape.push_back(Json{{"curve", e.curve}, {"point", to_json(e.point)}, {"order", e.order}});
  out["escape"] = escape;
  return out;
}

Json to_json(const ClearanceReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    v.push_back(Json{{"pair", x.pair}, {"coordinate", x.coordinate == 0 ? "x" : "y"}, {"circle", x.circle},
                     {"distance", x.distance}});
  }
  return Json{{"verdict", to_string(r.verdict)}, {"violations", v}};
}

Json to_json(const ReductionResult& r) {
  Json points = Json::array();
  for (const auto& m : r.marked_points) {
    points.push_back(Json{{"point", to_json(m.point)}, {"role", to_string(m.role)}, {"index", m.index}});
  }
  Json punct = Json::array();
  for (const auto& p : r.plane.punctures) punct.push_back(to_json(p));
  return Json{{"punctures", punct}, {"windings", r.windings.puncture_windings}, {"marked_points", points}};
}

Json to_json(const PerturbationLog& log) {
  Json attempts = Json::array();
  for (const auto& a : log.attempts) {
    attempts.push_back(Json{{"p", a.p.to_string()}, {"perturbation", a.perturbation}, {"failed_check", a.failed_check}});
  }
  Json out{{"seed", log.seed}, {"attempts", attempts}, {"accepted", log.accepted.to_string()}};
  if (log.regular_value) out["regular_value"] = to_json(*log.regular_value);
  out["final"] = log.final.to_string();
  return out;
}

Json to_json(const Violation& v) {
  Json out{{"constraint", v.constraint}, {"indices", v.indices}};
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_string()) return parse_gaussian(j.get<std::string>());
  if (j.is_number_integer()) return GaussianRational(j.get<long>());
  return {parse_rational(text_of(field(j, "re"))), parse_rational(text_of(field(j, "im")))};
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial must be a coefficient array");
  std::vector<GaussianRational> c;
  for (const auto& x : j) c.push_back(gaussian_from_json(x));
  return Polynomial(c);
}

RationalFunction rational_function_from_json(const Json& j) {
  if (j.is_string()) return parse_rational_function(j.get<std::string>());
  return {polynomial_from_json(field(j, "num")), polynomial_from_json(field(j, "den"))};
}

FactoredRational factored_from_json(const Json& j) {
  std::vector<FactoredRational::Factor> fs;
  for (const auto& f : field(j, "factors")) {
    fs.push_back({gaussian_from_json(field(f, "root")), field(f, "multiplicity").get<int>()});
  }
  return FactoredRational(gaussian_from_json(field(j, "scale")), fs);
}

MapPair map_from_json(const Json& j) {
  if (j.is_string()) return parse_map(j.get<std::string>());
  MapPair m{rational_function_from_json(field(j, "first")), FactoredRational()};
  const Json& s = field(j, "second");
  std::string kind = text_of(field(s, "kind"));
  if (kind == "exp") {
    Scalar l{gaussian_from_json(field(s, "lambda")), field(s, "pi_power").get<int>()};
    if (l.is_zero() || (l.pi_power != 0 && l.pi_power != 1)) {
      throw Error(ErrorCode::InvalidSecondComponent, "exp needs lambda != 0 and pi_power in {0, 1}");
    }
    m.second = ExpLinear{l};
  } else if (kind == "factored") {
    m.second = factored_from_json(s);
  } else {
    throw Error(ErrorCode::ParseError, "unknown second component kind '" + kind + "'");
  }
  return m;
}

}  // namespace okaforge::cli
