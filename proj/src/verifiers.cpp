#include "okaforge/verifiers.hpp"

#include <algorithm>
#include <cmath>

#include "okaforge/error.hpp"
#include "okaforge/numeric/roots.hpp"

namespace okaforge {

namespace {

Certificate make(CertificateKind kind) { return Certificate{kind, Verdict::Pass, std::nullopt, {}, {}}; }

void fail(Certificate& c, Witness w) {
  c.verdict = Verdict::Fail;
  c.witnesses.push_back(std::move(w));
}

bool is_moebius(const RationalFunction& f) {
  return !f.is_constant() && f.num().degree() <= 1 && f.den().degree() <= 1;
}

std::string side_name(int order) { return order > 0 ? "zero" : "pole"; }

// Decimal approximations of the roots of p at double-ish precision.
std::vector<std::string> approximate_roots(const Polynomial& p) {
  std::vector<std::string> out;
  for (const auto& r : numeric::find_roots(p)) {
    out.push_back(r.center.re.to_string(15) + " + " + r.center.im.to_string(15) + "i");
  }
  return out;
}

Polynomial strip_points(const Polynomial& p, std::span<const GaussianRational> points) {
  if (points.empty() || p.is_zero()) return p;
  return strip_common_roots(p, puncture_polynomial(points));
}

bool in_closure(const PuncturedCircularDomain& D, const GaussianRational& z) {
  if (z.norm() > 1) return false;
  for (const auto& h : D.holes) {
    if ((z - h.center).norm() < h.radius * h.radius) return false;
  }
  return true;
}

// True if some root of p may lie in the closure of D; numeric with a margin,
// so a root near the boundary counts as inside.
bool numeric_root_in_closure(const Polynomial& p, const PuncturedCircularDomain& D, std::string& where) {
  if (p.is_constant()) return false;
  for (const auto& r : numeric::find_roots(p)) {
    double re = r.center.re.to_double();
    double im = r.center.im.to_double();
    double margin = r.radius.to_double() + 1e-12;
    bool outside = std::hypot(re, im) - margin > 1.0;
    for (const auto& h : D.holes) {
      double d = std::hypot(re - h.center.re_double(), im - h.center.im_double());
      if (d + margin < h.radius.get_d()) outside = true;
    }
    if (!outside) {
      where = r.center.re.to_string(15) + " + " + r.center.im.to_string(15) + "i";
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Witness> root_witnesses(const Polynomial& p, const std::string& label) {
  std::vector<Witness> out;
  if (p.is_constant()) return out;
  FactoredRational exact;
  if (numeric::try_factor(RationalFunction(p), exact)) {
    for (const auto& f : exact.factors()) {
      out.push_back({label, f.root, "multiplicity " + std::to_string(f.multiplicity)});
    }
    return out;
  }
  for (const auto& s : approximate_roots(p)) out.push_back({label, std::nullopt, "approximately " + s});
  return out;
}

Certificate check_immersion(const MapPair& map, const PuncturedPlane& X) {
  Certificate c = make(CertificateKind::Immersion);
  if (map.has_exp_second()) {
    c.note = "second component exp(lambda z) has nowhere vanishing derivative";
    return c;
  }
  Polynomial nf = map.first.derivative_numerator();
  Polynomial ng = map.factored().log_derivative_numerator();
  if (map.factored().is_constant()) ng = Polynomial();
  if (nf.is_zero() && ng.is_zero()) {
    fail(c, {"constant_map", std::nullopt, "both components are constant"});
    return c;
  }
  Polynomial h = nf.is_zero() ? ng.monic() : (ng.is_zero() ? nf.monic() : poly_gcd(nf, ng));
  Polynomial rest = strip_points(h, X.punctures);
  if (rest.is_constant()) return c;
  for (auto& w : root_witnesses(rest, "common_critical_point")) fail(c, std::move(w));
  c.note = "common critical points are the roots of " + rest.to_string();
  return c;
}

Certificate check_properness(const MapPair& map, const PuncturedPlane& X) {
  Certificate c = make(CertificateKind::Properness);
  std::optional<RationalFunction> g = map.second_rational();
  for (const auto& a : X.punctures) {
    int of = map.first.is_zero() ? 0 : map.first.order_at(a);
    int og = g ? map.factored().order_at(a) : 0;
    if (of >= 0 && og == 0) {
      fail(c, {"no_escape_at_puncture", a,
               "first has order " + std::to_string(of) + " and second has order " + std::to_string(og)});
    }
  }
  int of_inf = map.first.is_zero() ? 1 : map.first.order_at_infinity();
  int og_inf = g ? map.factored().order_at_infinity() : 0;
  if (of_inf >= 0 && og_inf == 0) {
    fail(c, {"no_escape_at_infinity", std::nullopt,
             "order at infinity: first " + std::to_string(of_inf) + ", second " + std::to_string(og_inf)});
  }
  Polynomial stray = strip_points(map.first.den(), X.punctures);
  for (auto& w : root_witnesses(stray, "first_pole_in_domain")) fail(c, std::move(w));
  if (g) {
    for (const auto& f : map.factored().factors()) {
      if (contains(X, f.root)) fail(c, {"second_" + side_name(f.multiplicity) + "_in_domain", f.root, ""});
    }
  }
  return c;
}

Certificate check_properness(const MapPair& map, const PuncturedCircularDomain& D) {
  Certificate c = make(CertificateKind::Properness);
  std::vector<GaussianRational> ends = D.punctures;
  ends.push_back(GaussianRational::i());
  for (const auto& h : D.holes) ends.push_back(h.center + GaussianRational(Rational(0), h.radius));
  bool rational = !map.has_exp_second();
  for (const auto& a : ends) {
    int of = map.first.is_zero() ? 0 : map.first.order_at(a);
    int og = rational ? map.factored().order_at(a) : 0;
    if (of >= 0 && og == 0) {
      fail(c, {"no_escape", a, "first has order " + std::to_string(of) + " and second has order " +
                                   std::to_string(og)});
    }
  }
  std::string where;
  if (numeric_root_in_closure(strip_points(map.first.den(), ends), D, where)) {
    fail(c, {"first_pole_in_closure", std::nullopt, "approximately " + where});
  }
  if (rational) {
    for (const auto& f : map.factored().factors()) {
      if (std::find(ends.begin(), ends.end(), f.root) != ends.end()) continue;
      if (in_closure(D, f.root)) fail(c, {"second_" + side_name(f.multiplicity) + "_in_closure", f.root, ""});
    }
  }
  return c;
}

Certificate check_injective_by_form(const MapPair& map) {
  Certificate c = make(CertificateKind::InjectiveByForm);
  if (is_moebius(map.first)) {
    c.note = "first component " + map.first.to_string() + " is affine or Moebius";
    return c;
  }
  if (auto g = map.second_rational(); g && is_moebius(*g)) {
    c.note = "second component " + map.factored().to_string() + " is affine or Moebius";
    return c;
  }
  fail(c, {"first_not_moebius", std::nullopt, map.first.to_string()});
  fail(c, {"second_not_moebius", std::nullopt,
           map.has_exp_second() ? "exp(" + map.exp_linear().lambda.to_string() + " z)" : map.factored().to_string()});
  return c;
}

namespace {

void compare_windings(Certificate& c, const std::vector<int>& got, const std::vector<int>& want, const char* label,
                      std::span<const GaussianRational> points) {
  if (got.size() != want.size()) {
    fail(c, {std::string(label) + "_length", std::nullopt,
             "expected " + std::to_string(want.size()) + " entries, found " + std::to_string(got.size())});
    return;
  }
  for (std::size_t j = 0; j < got.size(); ++j) {
    if (got[j] == want[j]) continue;
    std::optional<GaussianRational> pt;
    if (j < points.size()) pt = points[j];
    fail(c, {label, pt, "index " + std::to_string(j) + ": expected " + std::to_string(want[j]) + ", found " +
                            std::to_string(got[j])});
  }
}

}  // namespace

Certificate check_winding(const MapPair& map, const PuncturedPlane& X, const WindingClass& expected) {
  Certificate c = make(CertificateKind::Winding);
  try {
    WindingClass w = classify_map(map, X);
    compare_windings(c, w.puncture_windings, expected.puncture_windings, "puncture_winding", X.punctures);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidSecondComponent) throw;
    fail(c, {"invalid_second_component", std::nullopt, e.what()});
  }
  return c;
}

Certificate check_winding(const MapPair& map, const PuncturedCircularDomain& D, const WindingClass& expected) {
  Certificate c = make(CertificateKind::Winding);
  try {
    WindingClass w = classify_map(map, D);
    compare_windings(c, w.puncture_windings, expected.puncture_windings, "puncture_winding", D.punctures);
    std::vector<GaussianRational> centers;
    for (const auto& h : D.holes) centers.push_back(h.center);
    compare_windings(c, w.hole_windings, expected.hole_windings, "hole_winding", centers);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidSecondComponent) throw;
    fail(c, {"invalid_second_component", std::nullopt, e.what()});
  }
  return c;
}

namespace {

// den is c z^k for some k >= 0.
bool monomial_only(const Polynomial& p) {
  if (p.is_zero()) return false;
  for (int k = 0; k < p.degree(); ++k) {
    if (!p.coeff(static_cast<std::size_t>(k)).is_zero()) return false;
  }
  return true;
}

}  // namespace

Certificate guard_not_proper_first(const RationalFunction& f) {
  if (!monomial_only(f.den())) {
    throw Error(ErrorCode::InvalidParameter, "first component " + f.to_string() + " has a pole in C*");
  }
  if (f.is_constant()) throw Error(ErrorCode::InvalidParameter, "first component is constant");
  Certificate c = make(CertificateKind::Guard);
  int o0 = f.order_at(GaussianRational(0));
  int oinf = f.order_at_infinity();
  if (o0 < 0 && oinf < 0) {
    c.verdict = Verdict::Fail;
    c.guard = GuardOutcome::NotInjectivePair;
    c.witnesses.push_back({"pole_at_zero", GaussianRational(0), "order " + std::to_string(o0)});
    c.witnesses.push_back({"pole_at_infinity", std::nullopt, "order " + std::to_string(oinf)});
    c.note = "f is proper on C*, so no injective (f, e^g): C* -> C x C* exists";
    return c;
  }
  c.guard = GuardOutcome::Pass;
  c.note = "f is not proper on C*; a proper injective map with this first component needs a first component "
           "with an essential singularity at 0 or infinity";
  return c;
}

Certificate guard_symmetry(const RationalFunction& f, const RationalFunction& sigma) {
  bool self_map = !sigma.is_zero() && monomial_only(sigma.num()) && monomial_only(sigma.den());
  if (!self_map) {
    throw Error(ErrorCode::InvalidParameter, "sigma = " + sigma.to_string() + " is not a self-map of C*");
  }
  Certificate c = make(CertificateKind::Guard);
  if (sigma == RationalFunction::identity()) {
    c.guard = GuardOutcome::Trivial;
    c.note = "sigma is the identity";
    return c;
  }
  RationalFunction composed = f.compose(sigma);
  if (composed == f) {
    c.verdict = Verdict::Fail;
    c.guard = GuardOutcome::NoNullInjectionWithThisF;
    c.witnesses.push_back({"symmetry", std::nullopt, "f(" + sigma.to_string() + ") = " + composed.to_string()});
    c.note = "f o sigma = f with sigma != id, so no injective null map (f, e^g) exists";
    return c;
  }
  c.guard = GuardOutcome::NotASymmetry;
  c.note = "f o sigma = " + composed.to_string() + " differs from f";
  return c;
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Immersion:
      return "Immersion";
    case CertificateKind::Properness:
      return "Properness";
    case CertificateKind::Winding:
      return "Winding";
    case CertificateKind::InjectiveByForm:
      return "InjectiveByForm";
    case CertificateKind::Guard:
      return "Guard";
  }
  return "Unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Warn:
      return "warn";
  }
  return "unknown";
}

std::string to_string(GuardOutcome outcome) {
  switch (outcome) {
    case GuardOutcome::Pass:
      return "Pass";
    case GuardOutcome::NotInjectivePair:
      return "NotInjectivePair";
    case GuardOutcome::Trivial:
      return "Trivial";
    case GuardOutcome::NotASymmetry:
      return "NotASymmetry";
    case GuardOutcome::NoNullInjectionWithThisF:
      return "NoNullInjectionWithThisF";
  }
  return "Unknown";
}

}  // namespace okaforge
