#include "okaforge/doublepoints.hpp"

#include <algorithm>
#include <random>

#include "okaforge/error.hpp"

namespace okaforge {

using numeric::BigComplex;
using numeric::BigFloat;
using numeric::CertifiedRoot;

namespace {

BivariatePolynomial bx(const Polynomial& p) { return BivariatePolynomial::in_x(p); }
BivariatePolynomial by(const Polynomial& p) { return BivariatePolynomial::in_y(p); }

// p(y + sigma x) as a bivariate polynomial.
BivariatePolynomial shifted_in_y(const Polynomial& p, const GaussianRational& sigma) {
  BivariatePolynomial lin({Polynomial({GaussianRational(0), sigma}), Polynomial::constant(1)});
  BivariatePolynomial acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * lin + BivariatePolynomial::constant(*it);
  }
  return acc;
}

// P(x, a + b x) as a polynomial in x.
Polynomial on_line(const BivariatePolynomial& P, const GaussianRational& a, const GaussianRational& b) {
  Polynomial line({a, b});
  Polynomial acc;
  for (auto it = P.rows().rbegin(); it != P.rows().rend(); ++it) acc = acc * line + *it;
  return acc;
}

BigFloat rounding_term(const BivariatePolynomial& F, const BigFloat& ax, const BigFloat& ay, mpfr_prec_t prec) {
  return numeric::magnitude_bound(F, ax, ay) * BigFloat::pow2(-static_cast<long>(prec) + 10, prec);
}

// |F(x, y)| small enough that a common zero within the discs is consistent.
bool vanishes_within(const BivariatePolynomial& F, const CertifiedRoot& x, const CertifiedRoot& y) {
  if (F.is_constant()) return F.is_zero();
  mpfr_prec_t prec = x.center.prec();
  BigFloat ax = numeric::abs(x.center) + x.radius;
  BigFloat ay = numeric::abs(y.center) + y.radius;
  BigFloat bound = numeric::lipschitz_bound(F, ax, ay) * (x.radius + y.radius) + rounding_term(F, ax, ay, prec);
  return numeric::abs(numeric::evaluate(F, x.center, y.center)) <= bound;
}

bool less_pair(const DoublePair& a, const DoublePair& b) {
  if (a.k != b.k) return a.k < b.k;
  if (a.x.re < b.x.re) return true;
  if (b.x.re < a.x.re) return false;
  return a.x.im < b.x.im;
}

CertifiedRoot translated(const CertifiedRoot& r, const BigComplex& s, const BigFloat& extra) {
  return {r.center + s, r.radius + extra, r.multiplicity};
}

}  // namespace

BivariatePolynomial diagonal_quotient(const RationalFunction& f) {
  const Polynomial& p = f.num();
  const Polynomial& q = f.den();
  BivariatePolynomial cross = bx(p) * by(q) - by(p) * bx(q);
  return exact_div(cross, BivariatePolynomial::x_minus_y());
}

PairSystem pair_system(const RationalFunction& f, const FactoredRational& g) {
  if (f.is_constant()) throw Error(ErrorCode::InvalidParameter, "first component is constant");
  if (g.is_constant()) throw Error(ErrorCode::InvalidParameter, "second component is constant");
  return {diagonal_quotient(f), diagonal_quotient(g.expand())};
}

ComponentVerdict common_component(const PairSystem& sys) {
  ComponentVerdict v;
  v.witness = bivariate_gcd(sys.ftilde, sys.gtilde);
  v.verdict = v.witness.is_constant() ? Finiteness::Finite : Finiteness::InfiniteCommonComponent;
  return v;
}

DoublePointReport enumerate_rational(const RationalFunction& f, const FactoredRational& g, const PuncturedPlane& X,
                                     const EnumerationOptions& opts) {
  PairSystem sys = pair_system(f, g);
  DoublePointReport report;
  ComponentVerdict cc = common_component(sys);
  if (cc.verdict == Finiteness::InfiniteCommonComponent) {
    report.finiteness = Finiteness::InfiniteCommonComponent;
    report.witness = cc.witness;
    return report;
  }
  if (sys.ftilde.is_constant() || sys.gtilde.is_constant()) return report;

  Polynomial R = resultant_in_y(sys.ftilde, sys.gtilde);
  if (R.is_zero()) {
    throw Error(ErrorCode::InternalInconsistency, "resultant vanishes although the pair system has no common factor");
  }
  Polynomial stripped = strip_common_roots(R, puncture_polynomial(X.punctures));
  report.elimination = stripped;
  if (stripped.is_constant()) return report;

  RationalFunction gr = g.expand();
  double target = opts.tol * 1e-3;
  mpfr_prec_t prec = opts.precision;
  for (;;) {
    numeric::RootOptions ro{prec, opts.max_precision, target};
    std::vector<CertifiedRoot> roots = numeric::find_roots(stripped, ro);
    numeric::FilterResult fr = numeric::filter_points(roots, X.punctures, opts.tol);
    std::vector<CertifiedRoot>& kept = fr.kept;
    report.pairs.clear();
    report.excluded.clear();
    bool residual_ok = true;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (std::size_t j = i + 1; j < kept.size(); ++j) {
        if (!vanishes_within(sys.ftilde, kept[i], kept[j]) || !vanishes_within(sys.gtilde, kept[i], kept[j])) {
          continue;
        }
        const BigComplex& x = kept[i].center;
        const BigComplex& y = kept[j].center;
        BigFloat res = numeric::abs(numeric::evaluate(f, x) - numeric::evaluate(f, y)) +
                       numeric::abs(numeric::evaluate(gr, x) - numeric::evaluate(gr, y));
        if (res > BigFloat(opts.tol, x.prec())) residual_ok = false;
        report.pairs.push_back({x, y, res, numeric::max(kept[i].radius, kept[j].radius), std::nullopt});
      }
    }
    for (const auto& m : fr.matched) {
      report.excluded.push_back({m.center, m.center, "coordinate within tol of a puncture", std::nullopt});
    }
    if (residual_ok) break;
    if (prec >= opts.max_precision) {
      throw Error(ErrorCode::PrecisionExhausted, "pair residual above tolerance at maximum precision");
    }
    prec = std::min(prec * 4, opts.max_precision);
    target *= 1e-6;
  }
  std::sort(report.pairs.begin(), report.pairs.end(), less_pair);
  return report;
}

namespace {

struct ShiftedSystem {
  std::vector<CertifiedRoot> roots;
  BigComplex shift;
};

// Roots of p(z) q(z + s) - p(z + s) q(z) after removing z = a and z = a - s for
// every puncture a; s = sigma pi^pi_power.
ShiftedSystem shifted_roots(const RationalFunction& f, const GaussianRational& sigma, int pi_power,
                            const PuncturedPlane& X, const numeric::RootOptions& ro) {
  const Polynomial& p = f.num();
  const Polynomial& q = f.den();
  ShiftedSystem out;
  mpfr_prec_t prec = ro.precision;
  if (pi_power == 0) {
    Polynomial P = p * q.shifted(sigma) - p.shifted(sigma) * q;
    if (P.is_zero()) throw Error(ErrorCode::InternalInconsistency, "f(z) - f(z + s) vanishes identically");
    std::vector<GaussianRational> bad = X.punctures;
    for (const auto& a : X.punctures) bad.push_back(a - sigma);
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    P = strip_common_roots(P, puncture_polynomial(bad));
    out.shift = BigComplex(sigma, prec);
    if (!P.is_constant()) out.roots = numeric::find_roots(P, ro);
    return out;
  }
  // x stands for pi, y for z.
  BivariatePolynomial P = by(p) * shifted_in_y(q, sigma) - shifted_in_y(p, sigma) * by(q);
  if (P.is_zero()) throw Error(ErrorCode::InternalInconsistency, "f(z) - f(z + s) vanishes identically");
  for (const auto& a : X.punctures) {
    BivariatePolynomial at_a({Polynomial::constant(-a), Polynomial::constant(1)});
    while (P.y_degree() >= 1 && P.at_y(a).is_zero()) P = exact_div(P, at_a);
    // z = a - sigma pi
    BivariatePolynomial at_shift({Polynomial({-a, sigma}), Polynomial::constant(1)});
    while (P.y_degree() >= 1 && on_line(P, a, -sigma).is_zero()) P = exact_div(P, at_shift);
  }
  BigFloat pi = BigFloat::pi(prec);
  out.shift = BigComplex(sigma, prec) * BigComplex(pi, BigFloat(prec));
  if (P.y_degree() >= 1) out.roots = numeric::find_roots_pi(P, ro);
  return out;
}

}  // namespace

DoublePointReport enumerate_exp(const RationalFunction& f, const Scalar& lambda, const PuncturedPlane& X, int K,
                                const EnumerationOptions& opts) {
  if (lambda.is_zero()) throw Error(ErrorCode::InvalidParameter, "exp(lambda z) needs lambda != 0");
  if (f.is_constant()) throw Error(ErrorCode::InvalidParameter, "first component is constant");
  if (K < 1) throw Error(ErrorCode::InvalidParameter, "truncation K must be positive");
  DoublePointReport report;
  report.finiteness = Finiteness::CountableTruncated;
  report.truncation = K;
  for (int k = 1; k <= K; ++k) {
    // s = 2 pi i k / lambda = (2 i k / c) pi^(1 - e)
    GaussianRational sigma = GaussianRational(Rational(0), Rational(2 * k)) / lambda.coeff;
    int pi_power = 1 - lambda.pi_power;
    for (mpfr_prec_t prec = opts.precision;; prec = std::min(prec * 4, opts.max_precision)) {
      numeric::RootOptions ro{prec, opts.max_precision, opts.tol * 1e-3};
      std::vector<DoublePair> found;
      std::vector<ExcludedPair> dropped;
      try {
        ShiftedSystem sys = shifted_roots(f, sigma, pi_power, X, ro);
        BigFloat shift_err = BigFloat::pow2(-static_cast<long>(prec) + 4, prec) *
                             (numeric::abs(sys.shift) + BigFloat(1.0, prec));
        std::vector<CertifiedRoot> ys;
        for (const auto& r : sys.roots) ys.push_back(translated(r, sys.shift, shift_err));
        numeric::FilterResult fx = numeric::filter_points(sys.roots, X.punctures, opts.tol);
        numeric::FilterResult fy = numeric::filter_points(ys, X.punctures, opts.tol);
        BigComplex lam = BigComplex(lambda.coeff, prec);
        if (lambda.pi_power == 1) lam *= BigComplex(BigFloat::pi(prec), BigFloat(prec));
        for (std::size_t n = 0; n < sys.roots.size(); ++n) {
          const BigComplex& x = sys.roots[n].center;
          const BigComplex& y = ys[n].center;
          bool x_in = std::any_of(fx.kept.begin(), fx.kept.end(), [&](const CertifiedRoot& r) {
            return r.center.re == x.re && r.center.im == x.im;
          });
          bool y_in = std::any_of(fy.kept.begin(), fy.kept.end(), [&](const CertifiedRoot& r) {
            return r.center.re == y.re && r.center.im == y.im;
          });
          if (!x_in || !y_in) {
            dropped.push_back({x, y, "coordinate within tol of a puncture", k});
            continue;
          }
          BigFloat res = numeric::abs(numeric::evaluate(f, x) - numeric::evaluate(f, y)) +
                         numeric::abs(numeric::exp(lam * x) - numeric::exp(lam * y));
          found.push_back({x, y, res, ys[n].radius, k});
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::AmbiguousRoot || prec >= opts.max_precision) throw;
        continue;
      }
      bool residual_ok = std::all_of(found.begin(), found.end(), [&](const DoublePair& d) {
        return d.residual <= BigFloat(opts.tol, d.residual.prec());
      });
      if (!residual_ok && prec < opts.max_precision) continue;
      if (!residual_ok) throw Error(ErrorCode::PrecisionExhausted, "pair residual above tolerance");
      report.pairs.insert(report.pairs.end(), found.begin(), found.end());
      report.excluded.insert(report.excluded.end(), dropped.begin(), dropped.end());
      break;
    }
  }
  std::sort(report.pairs.begin(), report.pairs.end(), less_pair);
  return report;
}

DoublePointReport enumerate(const MapPair& map, const PuncturedPlane& X, int K, const EnumerationOptions& opts) {
  if (map.has_exp_second()) return enumerate_exp(map.first, map.exp_linear().lambda, X, K, opts);
  if (map.first.is_constant()) {
    // Only the second component separates points.
    throw Error(ErrorCode::InvalidParameter, "first component is constant");
  }
  return enumerate_rational(map.first, map.factored(), X, opts);
}

Polynomial fiber_polynomial(const FactoredRational& g, const GaussianRational& a) {
  RationalFunction e = g.expand();
  return e.num() - e.den() * a;
}

GaussianRational find_regular_value(const FactoredRational& g, const PuncturedPlane& X, std::uint64_t seed) {
  if (g.is_constant()) throw Error(ErrorCode::InvalidParameter, "second component is constant");
  Polynomial punct = puncture_polynomial(X.punctures);
  std::mt19937_64 rng(seed);
  for (long t = 0; t < 100000; ++t) {
    GaussianRational a;
    if (seed == 0) {
      a = GaussianRational(t + 2);
    } else {
      long re = static_cast<long>(rng() % 41) - 20;
      long im = static_cast<long>(rng() % 41) - 20;
      long den = static_cast<long>(rng() % 4) + 1;
      a = GaussianRational::from_fractions(re, den, im, den);
    }
    if (a.is_zero()) continue;
    Polynomial N = fiber_polynomial(g, a);
    if (N.is_constant()) continue;
    if (!poly_gcd(N, N.derivative()).is_constant()) continue;
    if (!punct.is_constant() && !poly_gcd(N, punct).is_constant()) continue;
    return a;
  }
  throw Error(ErrorCode::InternalInconsistency, "no regular value found");
}

bool f_regular_on_fiber(const RationalFunction& f, const Polynomial& fiber) {
  Polynomial nf = f.derivative_numerator();
  if (nf.is_constant()) return true;
  const Polynomial& p = f.num();
  const Polynomial& q = f.den();
  // p(z) - w q(z) with x = w and y = z
  std::vector<Polynomial> rows;
  std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  for (std::size_t j = 0; j < n; ++j) rows.push_back(Polynomial({p.coeff(j), -q.coeff(j)}));
  Polynomial crit = resultant_in_y(BivariatePolynomial(rows), by(nf));
  if (crit.is_zero()) throw Error(ErrorCode::InternalInconsistency, "critical-value resultant vanishes");
  if (crit.is_constant()) return true;
  Polynomial pulled = RationalFunction(crit).compose(f).num();
  return poly_gcd(pulled, fiber).is_constant();
}

namespace {

// sum |c_k| r^k, or sum k |c_k| r^(k-1) for the derivative.
BigFloat coefficient_norm(const Polynomial& p, const BigFloat& r, int derivative) {
  BigFloat acc(r.prec());
  for (int k = p.degree(); k >= derivative; --k) {
    acc *= r;
    BigFloat c = numeric::abs(BigComplex(p.coeff(static_cast<std::size_t>(k)), r.prec()));
    if (derivative == 1) c *= BigFloat(static_cast<double>(k), r.prec());
    acc += c;
  }
  return acc;
}

// sup |f'| over the disc, or nothing when the disc may contain a pole.
std::optional<BigFloat> derivative_bound(const RationalFunction& f, const CertifiedRoot& root) {
  mpfr_prec_t prec = root.center.prec();
  BigFloat rad = numeric::abs(root.center) + root.radius;
  BigFloat top = coefficient_norm(f.derivative_numerator(), rad, 0);
  BigFloat qc = numeric::abs(numeric::evaluate(f.den(), root.center));
  BigFloat low = qc - coefficient_norm(f.den(), rad, 1) * root.radius - BigFloat::pow2(-static_cast<long>(prec) + 8, prec);
  if (low.sign() <= 0) return std::nullopt;
  return top / (low * low);
}

}  // namespace

FiberReport check_fiber_injectivity(const RationalFunction& f, const FactoredRational& g, const GaussianRational& a,
                                    const EnumerationOptions& opts) {
  Polynomial N = fiber_polynomial(g, a);
  if (N.is_constant()) throw Error(ErrorCode::InvalidParameter, "empty fiber");
  FiberReport rep;
  for (mpfr_prec_t prec = opts.precision;; prec = std::min(prec * 4, opts.max_precision)) {
    numeric::RootOptions ro{prec, prec, opts.tol * 1e-3};
    try {
      rep.fiber = numeric::find_roots(N, ro);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      if (prec >= opts.max_precision) throw Error(ErrorCode::AmbiguousFiber, "fiber roots not certified");
      continue;
    }
    rep.precision = prec;
    rep.collision.reset();
    rep.injective = true;
    std::vector<BigComplex> values;
    std::vector<BigFloat> errors;
    for (const auto& r : rep.fiber) {
      auto L = derivative_bound(f, r);
      if (!L) throw Error(ErrorCode::AmbiguousFiber, "fiber disc may contain a pole of f");
      values.push_back(numeric::evaluate(f, r.center));
      errors.push_back(*L * r.radius + BigFloat::pow2(-static_cast<long>(prec) + 16, prec) *
                                           (numeric::abs(values.back()) + BigFloat(1.0, prec)));
    }
    for (std::size_t i = 0; i < values.size() && rep.injective; ++i) {
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        if (numeric::abs(values[i] - values[j]) <= errors[i] + errors[j]) {
          rep.injective = false;
          rep.collision = std::make_pair(i, j);
          break;
        }
      }
    }
    if (rep.injective || prec >= opts.max_precision) return rep;
  }
}

std::string to_string(Finiteness f) {
  switch (f) {
    case Finiteness::Finite:
      return "Finite";
    case Finiteness::InfiniteCommonComponent:
      return "InfiniteCommonComponent";
    case Finiteness::CountableTruncated:
      return "CountableTruncated";
  }
  return "Unknown";
}

}  // namespace okaforge
