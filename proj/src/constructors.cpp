#include "okaforge/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "okaforge/doublepoints.hpp"
#include "okaforge/error.hpp"

namespace okaforge {

namespace {

Polynomial lin(const GaussianRational& a) { return Polynomial::linear(a); }

GaussianRational draw_constant(std::mt19937_64& rng) {
  auto part = [&] {
    long num = static_cast<long>(rng() % 13) - 6;
    long den = 1 + static_cast<long>(rng() % 4);
    return Rational(num, den);
  };
  Rational re = part();
  Rational im = part();
  if (sgn(re) == 0 && sgn(im) == 0) re = 1;
  return {re, im};
}

GaussianRational draw_unit(std::mt19937_64& rng) {
  static const GaussianRational units[] = {GaussianRational(1), GaussianRational::i(), GaussianRational(-1),
                                           -GaussianRational::i(), GaussianRational(1) + GaussianRational::i()};
  return units[rng() % 5];
}

void check_shape(const PuncturedPlane& X, const WindingClass& w) {
  if (w.puncture_windings.size() != X.punctures.size() || !w.hole_windings.empty()) {
    throw Error(ErrorCode::ShapeError, "winding vector does not match the punctures");
  }
}

struct Split {
  std::vector<std::size_t> nonzero;
  std::vector<std::size_t> zero;
};

Split split(const std::vector<int>& k) {
  Split s;
  for (std::size_t j = 0; j < k.size(); ++j) (k[j] != 0 ? s.nonzero : s.zero).push_back(j);
  return s;
}

FactoredRational product(std::span<const GaussianRational> points, std::span<const int> orders) {
  std::vector<FactoredRational::Factor> fs;
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (orders[j] != 0) fs.push_back({points[j], orders[j]});
  }
  return FactoredRational(1, fs);
}

Polynomial product_of(std::span<const GaussianRational> points, const std::vector<std::size_t>& idx) {
  Polynomial p = Polynomial::constant(1);
  for (auto j : idx) p *= lin(points[j]);
  return p;
}

// First failing check of a candidate numerator, or empty when all pass.
std::string first_failure(const Polynomial& p, const Polynomial& q, const FactoredRational& g, const PuncturedPlane& X,
                          const WindingClass& w, std::uint64_t seed, std::optional<GaussianRational>& a) {
  if (poly_gcd(p, q).degree() > 0) return "coprime";
  MapPair map{RationalFunction(p, q), g};
  if (!check_immersion(map, X).passed()) return "immersion";
  a = find_regular_value(g, X, seed);
  if (!f_regular_on_fiber(map.first, fiber_polynomial(g, *a))) return "fiber_regular";
  try {
    if (!check_fiber_injectivity(map.first, g, *a).injective) return "fiber_injectivity";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AmbiguousFiber && e.code() != ErrorCode::PrecisionExhausted) throw;
    return "fiber_injectivity";
  }
  if (common_component(pair_system(map.first, g)).verdict != Finiteness::Finite) return "finite";
  if (!check_properness(map, X).passed()) return "properness";
  if (!check_winding(map, X, w).passed()) return "winding";
  return {};
}

std::vector<GaussianRational> boundary_marks(const PuncturedCircularDomain& D) {
  std::vector<GaussianRational> b = {GaussianRational::i()};
  for (const auto& h : D.holes) b.push_back(h.center + GaussianRational(Rational(0), h.radius));
  return b;
}

}  // namespace

MapPair build_null_immersion(const PuncturedPlane& X, const GaussianRational& c) {
  if (X.punctures.empty()) throw Error(ErrorCode::InvalidParameter, "null construction needs a puncture");
  if (std::find(X.punctures.begin(), X.punctures.end(), c) != X.punctures.end()) {
    throw Error(ErrorCode::InvalidParameter, "c = " + c.to_string() + " is a puncture");
  }
  Polynomial num = lin(c).pow(static_cast<unsigned>(X.punctures.size() + 1));
  return {RationalFunction(num, puncture_polynomial(X.punctures)), ExpLinear{Scalar{GaussianRational(1), 0}}};
}

std::pair<MapPair, PerturbationLog> build_nonnull_immersion(const PuncturedPlane& X, const WindingClass& w,
                                                            const NonnullOptions& opts) {
  check_shape(X, w);
  Split s = split(w.puncture_windings);
  if (s.nonzero.empty()) throw Error(ErrorCode::WrongBranch, "null class; use the null construction");
  FactoredRational g = product(X.punctures, w.puncture_windings);
  PerturbationLog log;
  log.seed = opts.seed;
  if (s.zero.empty()) {
    log.accepted = Polynomial::monomial(1);
    log.final = MapPair{RationalFunction::identity(), g};
    return {log.final, log};
  }

  Polynomial q = product_of(X.punctures, s.zero);
  std::mt19937_64 rng(opts.seed);
  Polynomial p = Polynomial::monomial(static_cast<std::size_t>(q.degree() + 1)) +
                 Polynomial::constant(draw_constant(rng));
  std::string how = "initial";
  int fiber_fixes = 0;
  for (int attempt = 0; attempt < opts.budget; ++attempt) {
    std::optional<GaussianRational> a;
    std::string failed = first_failure(p, q, g, X, w, opts.seed, a);
    if (failed.empty()) {
      log.accepted = p;
      log.regular_value = a;
      log.final = MapPair{RationalFunction(p, q), g};
      return {log.final, log};
    }
    log.attempts.push_back({p, how, failed});
    if (failed == "fiber_injectivity") {
      // nudge one non-leading coefficient of p; q and g stay fixed
      std::size_t idx = static_cast<std::size_t>(fiber_fixes) % static_cast<std::size_t>(p.degree());
      GaussianRational delta = draw_unit(rng) * GaussianRational(Rational(1, 1000)).pow(1 + fiber_fixes / p.degree());
      p += Polynomial::monomial(idx, delta);
      how = "coefficient " + std::to_string(idx) + " += " + delta.to_string();
      ++fiber_fixes;
    } else {
      GaussianRational beta = draw_constant(rng);
      p += Polynomial::constant(beta - p.coeff(0));
      how = "constant term := " + beta.to_string();
    }
  }
  throw Error(ErrorCode::SearchExhausted,
              "no admissible numerator within " + std::to_string(opts.budget) + " attempts");
}

MapPair replay(const PuncturedPlane& X, const WindingClass& w, const PerturbationLog& log) {
  check_shape(X, w);
  Split s = split(w.puncture_windings);
  FactoredRational g = product(X.punctures, w.puncture_windings);
  if (s.zero.empty()) return {RationalFunction::identity(), g};
  return {RationalFunction(log.accepted, product_of(X.punctures, s.zero)), g};
}

std::variant<PlaneEmbedding, NotCovered> build_embedding_plane(const PuncturedPlane& X, const WindingClass& w) {
  check_shape(X, w);
  const auto& a = X.punctures;
  const auto& k = w.puncture_windings;
  std::size_t n = a.size();
  Split s = split(k);
  auto second_over = [&](const std::vector<std::size_t>& idx) {
    std::vector<FactoredRational::Factor> fs;
    for (auto j : idx) fs.push_back({a[j], k[j]});
    return FactoredRational(1, fs);
  };
  auto order = [&](std::vector<std::size_t> head, const std::vector<std::size_t>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
  };
  if (n == 0) return NotCovered{"no punctures"};

  if (s.zero.empty()) {
    return PlaneEmbedding{1, {RationalFunction::identity(), second_over(s.nonzero)}, s.nonzero};
  }
  long sum = 0;
  for (auto j : s.nonzero) sum += k[j];
  if (s.zero.size() == 1 && n >= 2 && sum != 0) {
    RationalFunction f(Polynomial::constant(1), lin(a[s.zero[0]]));
    return PlaneEmbedding{2, {f, second_over(s.nonzero)}, order(s.nonzero, s.zero)};
  }
  if (n >= 3 && s.nonzero.size() == 2 && k[s.nonzero[0]] * k[s.nonzero[1]] == -1) {
    std::size_t plus = k[s.nonzero[0]] == 1 ? s.nonzero[0] : s.nonzero[1];
    std::size_t minus = plus == s.nonzero[0] ? s.nonzero[1] : s.nonzero[0];
    long c = 0;
    while (std::find(a.begin(), a.end(), GaussianRational(c)) != a.end()) ++c;
    RationalFunction f(lin(GaussianRational(c)).pow(static_cast<unsigned>(n - 1)), product_of(a, s.zero));
    FactoredRational g(1, {{a[plus], 1}, {a[minus], -1}});
    return PlaneEmbedding{3, {f, g}, order({plus, minus}, s.zero)};
  }
  if (n >= 3 && s.nonzero.size() == 1 && std::abs(k[s.nonzero[0]]) == 1) {
    RationalFunction f(Polynomial::constant(1), product_of(a, s.zero));
    return PlaneEmbedding{4, {f, second_over(s.nonzero)}, order(s.nonzero, s.zero)};
  }
  return NotCovered{"winding class matches none of the four explicit cases"};
}

std::variant<CircularEmbedding, NotCovered> build_embedding_circular(const PuncturedCircularDomain& D,
                                                                     const WindingClass& w, std::uint64_t seed) {
  if (!validate(D).empty()) throw Error(ErrorCode::InvalidParameter, "domain fails validation");
  if (D.punctures.empty()) throw Error(ErrorCode::InvalidParameter, "at least one puncture is required");
  CircularEmbedding out;
  out.reduction = reduce_to_plane(D, w);
  const auto& a = D.punctures;
  const auto& k = w.puncture_windings;
  const auto& s_hole = w.hole_windings;
  const std::vector<GaussianRational>& y_points = out.reduction.plane.punctures;
  std::vector<GaussianRational> b = boundary_marks(D);
  std::size_t n = a.size();
  std::size_t m = D.holes.size();
  Split s = split(k);
  bool holes_zero = std::all_of(s_hole.begin(), s_hole.end(), [](int v) { return v == 0; });

  auto poles_at = [&](const std::vector<std::size_t>& idx) {
    Polynomial den = product_of(a, idx);
    for (const auto& bi : b) den *= lin(bi);
    return den;
  };
  auto generic_first = [&](const Polynomial& den) {
    Rational min_modulus(8);
    for (int t = 0;; ++t, min_modulus *= 2) {
      GaussianRational d = pick_generic_d(b, min_modulus, seed + static_cast<std::uint64_t>(t));
      RationalFunction f(lin(d), den);
      ProjectionCertificate cert = d_certificate(f, d, b, min_modulus);
      if (cert.passed() || t == 16) return std::make_pair(f, cert);
    }
  };

  if (s.zero.size() <= 1) {
    out.case_number = s.zero.empty() ? 1 : 2;
    RationalFunction f = s.zero.empty() ? RationalFunction::identity()
                                        : RationalFunction(Polynomial::constant(1), lin(a[s.zero[0]]));
    FactoredRational g = product(y_points, out.reduction.windings.puncture_windings);
    out.projection = theta_certificate(g, b);
    if (!out.projection.passed()) {
      Remediation r = remediate_thetas(g, b, y_points, seed);
      g = r.g;
      out.projection = r.certificate;
      out.remediation = r;
    }
    out.map = {f, g};
  } else if (n >= 3 && holes_zero && s.nonzero.size() == 2 && k[s.nonzero[0]] * k[s.nonzero[1]] == -1) {
    out.case_number = 3;
    std::size_t plus = k[s.nonzero[0]] == 1 ? s.nonzero[0] : s.nonzero[1];
    std::size_t minus = plus == s.nonzero[0] ? s.nonzero[1] : s.nonzero[0];
    auto [f, cert] = generic_first(poles_at(s.zero));
    out.map = {f, FactoredRational(1, {{a[plus], 1}, {a[minus], -1}})};
    out.projection = cert;
  } else if (n >= 3 && holes_zero && s.nonzero.size() == 1 && std::abs(k[s.nonzero[0]]) == 1) {
    out.case_number = 4;
    auto [f, cert] = generic_first(poles_at(s.zero));
    out.map = {f, FactoredRational(1, {{a[s.nonzero[0]], k[s.nonzero[0]]}})};
    out.projection = cert;
  } else if (n >= 2 && holes_zero && s.nonzero.empty()) {
    out.case_number = 5;
    auto [f, cert] = generic_first(poles_at(s.zero));
    out.map = {f, FactoredRational(1, {{GaussianRational(2), 1}})};
    out.projection = cert;
  } else if (n >= 2 && m == 1 && s.nonzero.empty() && std::abs(s_hole[0]) == 1) {
    out.case_number = 6;
    RationalFunction f(Polynomial::constant(1), product_of(a, s.zero));
    FactoredRational g(1, {{b[1], s_hole[0]}, {b[0], -s_hole[0]}});
    out.map = {f, g};
    out.projection = split_certificate(g, b);
  } else {
    return NotCovered{"winding class matches none of the six explicit cases"};
  }

  PuncturedPlane Y{y_points};
  out.wold.properness = check_properness(out.map, D);
  out.wold.immersion = check_immersion(out.map, Y);
  out.wold.injective = check_injective_by_form(out.map);
  DoublePointReport report;
  if (!out.wold.injective.passed()) report = enumerate(out.map, Y, 0);
  out.wold.clearance = report.finiteness == Finiteness::Finite ? boundary_clearance(report, D)
                                                               : ClearanceReport{Verdict::Fail, {}};
  return out;
}

bool collinear(const GaussianRational& d, const GaussianRational& bi, const GaussianRational& bj) {
  return sgn(((d - bi) * (bj - bi).conj()).im()) == 0;
}

GaussianRational pick_generic_d(std::span<const GaussianRational> points, const Rational& min_modulus,
                                std::uint64_t seed) {
  // smallest integer R with R^2 >= min_modulus^2; every candidate R' + t i with
  // R' >= R then clears the bound exactly
  Rational min2 = min_modulus * min_modulus;
  long R = std::max(0L, static_cast<long>(std::floor(std::sqrt(min2.get_d()))) - 1);
  while (Rational(R * R) < min2) ++R;
  GaussianRational unit(1);
  long t0 = 1;
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    R += static_cast<long>(rng() % 8);
    t0 += static_cast<long>(rng() % 5);
    unit = GaussianRational::i().pow(static_cast<long>(rng() % 4));
  }
  for (long ring = R;; ++ring) {
    for (long t = t0; t <= t0 + ring; ++t) {
      GaussianRational d = unit * GaussianRational(Rational(ring), Rational(t));
      if (d.norm() < min2) continue;
      bool ok = true;
      for (std::size_t i = 0; i < points.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < points.size() && ok; ++j) ok = !collinear(d, points[i], points[j]);
      }
      if (ok) return d;
    }
  }
}

}  // namespace okaforge
