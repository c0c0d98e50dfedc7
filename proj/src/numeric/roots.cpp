#include "okaforge/numeric/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "okaforge/error.hpp"

namespace okaforge::numeric {

namespace {

using LComplex = std::complex<long double>;

BigComplex horner(std::span<const BigComplex> c, const BigComplex& z) {
  BigComplex acc(z.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

// p(z) and p'(z) together.
std::pair<BigComplex, BigComplex> horner2(std::span<const BigComplex> c, const BigComplex& z) {
  BigComplex p(z.prec());
  BigComplex dp(z.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp *= z;
    dp += p;
    p *= z;
    p += *it;
  }
  return {std::move(p), std::move(dp)};
}

BigFloat abs_horner(std::span<const BigComplex> c, const BigFloat& r) {
  BigFloat acc(r.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= r;
    acc += abs(*it);
  }
  return acc;
}

LComplex to_lcomplex(const BigComplex& z) {
  long double re = mpfr_get_ld(z.re.get(), MPFR_RNDN);
  long double im = mpfr_get_ld(z.im.get(), MPFR_RNDN);
  return {re, im};
}

BigComplex from_lcomplex(const LComplex& z, mpfr_prec_t prec) {
  BigComplex r(prec);
  mpfr_set_ld(r.re.get(), z.real(), MPFR_RNDN);
  mpfr_set_ld(r.im.get(), z.imag(), MPFR_RNDN);
  return r;
}

// Initial guesses on a circle whose radius is the geometric mean of the
// root moduli, with a fixed angular offset to break symmetry.
std::vector<LComplex> initial_guesses(std::span<const BigComplex> c) {
  const std::size_t n = c.size() - 1;
  long double lead = std::abs(to_lcomplex(c[n]));
  long double tail = 0;
  std::size_t low = 0;
  while (low < n && c[low].is_zero()) ++low;
  tail = std::abs(to_lcomplex(c[low]));
  long double radius = 1;
  if (lead > 0 && tail > 0 && n > low) {
    radius = std::pow(tail / lead, 1.0L / static_cast<long double>(n - low));
  }
  if (!std::isfinite(radius) || radius <= 0) radius = 1;
  std::vector<LComplex> z(n);
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  for (std::size_t j = 0; j < n; ++j) {
    long double angle = two_pi * static_cast<long double>(j) / static_cast<long double>(n) + 0.4L;
    z[j] = std::polar(radius * (low > 0 && j < low ? 0.5L : 1.0L), angle);
  }
  return z;
}

// Aberth iteration in long double; good enough to seed the high-precision
// stage. Returns false if it produced non-finite values.
bool aberth_fast(std::span<const BigComplex> coeffs, std::vector<LComplex>& z) {
  std::vector<LComplex> c;
  c.reserve(coeffs.size());
  for (const auto& x : coeffs) c.push_back(to_lcomplex(x));
  const std::size_t n = z.size();
  for (int iter = 0; iter < 400; ++iter) {
    long double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      LComplex p = 0;
      LComplex dp = 0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z[i] + p;
        p = p * z[i] + *it;
      }
      if (p == LComplex(0)) continue;
      LComplex ratio = p / dp;
      LComplex sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      }
      LComplex w = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[i])));
    }
    if (worst < 1e-17L) break;
  }
  for (const auto& x : z) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  }
  return true;
}

// High-precision Aberth sweeps until corrections reach the working precision.
void aberth_refine(std::span<const BigComplex> c, std::vector<BigComplex>& z, mpfr_prec_t prec, int max_iter) {
  const std::size_t n = z.size();
  BigFloat one(1.0, prec);
  BigComplex cone(one, BigFloat(prec));
  BigFloat eps = BigFloat::pow2(-static_cast<long>(prec) + 8, prec);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      auto [p, dp] = horner2(c, z[i]);
      if (p.is_zero()) continue;
      BigComplex ratio = p / dp;
      BigComplex sum(prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) sum += cone / (z[i] - z[j]);
      }
      BigComplex w = ratio / (cone - ratio * sum);
      z[i] -= w;
      BigFloat scale = max(one, abs(z[i]));
      if (abs(w) > eps * scale) converged = false;
    }
    if (converged) break;
  }
}

struct Inclusion {
  std::vector<BigFloat> radii;
  bool disjoint = true;
};

// Weierstrass corrections W_i = p(z_i) / (lc prod_{j != i} (z_i - z_j)); the
// discs D(z_i, n |W_i|) contain all roots, and a connected union of k discs
// contains exactly k roots. Evaluation error is folded into |p(z_i)|.
Inclusion weierstrass_discs(std::span<const BigComplex> c, const std::vector<BigComplex>& z, mpfr_prec_t prec) {
  const std::size_t n = z.size();
  Inclusion inc;
  BigFloat unit = BigFloat::pow2(-static_cast<long>(prec), prec);
  BigFloat slack = BigFloat(1.0, prec) + BigFloat::pow2(-static_cast<long>(prec) + 16, prec);
  BigFloat nn(static_cast<double>(n), prec);
  BigFloat lead = abs(c[n]);
  for (std::size_t i = 0; i < n; ++i) {
    BigFloat pz = abs(horner(c, z[i]));
    BigFloat err = abs_horner(c, abs(z[i])) * unit * BigFloat(static_cast<double>(8 * (n + 2)), prec);
    BigFloat denom = lead;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) denom *= abs(z[i] - z[j]);
    }
    if (denom.is_zero()) {
      inc.radii.emplace_back(1e300, prec);
      inc.disjoint = false;
      continue;
    }
    inc.radii.push_back(nn * (pz + err) / denom * slack);
  }
  for (std::size_t i = 0; i < n && inc.disjoint; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (abs(z[i] - z[j]) <= inc.radii[i] + inc.radii[j]) {
        inc.disjoint = false;
        break;
      }
    }
  }
  return inc;
}

bool less_center(const CertifiedRoot& a, const CertifiedRoot& b) {
  if (a.center.re < b.center.re) return true;
  if (b.center.re < a.center.re) return false;
  return a.center.im < b.center.im;
}

// Solves one squarefree polynomial at a single precision. Returns false if
// certification did not succeed at this precision.
bool solve_at(const std::vector<BigComplex>& c, mpfr_prec_t prec, double target, std::vector<CertifiedRoot>& out) {
  const std::size_t n = c.size() - 1;
  std::vector<BigComplex> z;
  z.reserve(n);
  if (n == 1) {
    z.push_back(-(c[0] / c[1]));
  } else {
    std::vector<LComplex> seed = initial_guesses(c);
    bool ok = aberth_fast(c, seed);
    if (!ok) seed = initial_guesses(c);
    for (const auto& s : seed) z.push_back(from_lcomplex(s, prec));
    aberth_refine(c, z, prec, ok ? 60 : 2000);
  }
  BigFloat limit(target, prec);
  for (int round = 0; round < 3; ++round) {
    Inclusion inc = weierstrass_discs(c, z, prec);
    bool small = std::all_of(inc.radii.begin(), inc.radii.end(), [&](const BigFloat& r) { return r < limit; });
    if (inc.disjoint && small) {
      for (std::size_t i = 0; i < n; ++i) out.push_back({z[i], inc.radii[i], 1});
      return true;
    }
    aberth_refine(c, z, prec, 200);
  }
  return false;
}

bool globally_disjoint(const std::vector<CertifiedRoot>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (abs(roots[i].center - roots[j].center) <= roots[i].radius + roots[j].radius) return false;
    }
  }
  return true;
}

using CoefficientFn = std::function<std::vector<BigComplex>(mpfr_prec_t)>;

std::vector<CertifiedRoot> solve_factors(const std::vector<std::pair<CoefficientFn, int>>& factors,
                                         const RootOptions& opts) {
  for (mpfr_prec_t prec = opts.precision;; prec *= 4) {
    prec = std::min(prec, opts.max_precision);
    std::vector<CertifiedRoot> all;
    bool ok = true;
    for (const auto& [fn, mult] : factors) {
      std::vector<CertifiedRoot> part;
      if (!solve_at(fn(prec), prec, opts.target_radius, part)) {
        ok = false;
        break;
      }
      for (auto& r : part) {
        r.multiplicity = mult;
        all.push_back(std::move(r));
      }
    }
    if (ok && globally_disjoint(all)) {
      std::sort(all.begin(), all.end(), less_center);
      return all;
    }
    if (prec >= opts.max_precision) break;
  }
  throw Error(ErrorCode::PrecisionExhausted, "root certification failed at " + std::to_string(opts.max_precision) +
                                                 " bits");
}

std::vector<BigComplex> to_big(const Polynomial& p, mpfr_prec_t prec) {
  std::vector<BigComplex> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x, prec);
  return c;
}

std::vector<BigComplex> pi_coefficients(const BivariatePolynomial& p, mpfr_prec_t prec) {
  // Evaluate each row (a polynomial in pi) a little above the working precision.
  mpfr_prec_t inner = prec + 32;
  BigComplex pi(BigFloat::pi(inner), BigFloat(inner));
  std::vector<BigComplex> c;
  c.reserve(p.rows().size());
  for (const auto& row : p.rows()) c.push_back(with_prec(evaluate(row, pi), prec));
  return c;
}

}  // namespace

std::vector<CertifiedRoot> find_roots_squarefree(const CoefficientFn& coefficients, const RootOptions& opts) {
  return solve_factors({{coefficients, 1}}, opts);
}

std::vector<CertifiedRoot> find_roots(const Polynomial& p, const RootOptions& opts) {
  if (p.is_constant()) throw Error(ErrorCode::InvalidParameter, "find_roots needs a nonconstant polynomial");
  std::vector<Polynomial> parts = squarefree_decomposition(p);
  std::vector<std::pair<CoefficientFn, int>> factors;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].is_constant()) continue;
    Polynomial f = parts[k];
    factors.emplace_back([f](mpfr_prec_t prec) { return to_big(f, prec); }, static_cast<int>(k + 1));
  }
  return solve_factors(factors, opts);
}

std::vector<CertifiedRoot> find_roots_pi(const BivariatePolynomial& p, const RootOptions& opts) {
  if (p.y_degree() < 1) throw Error(ErrorCode::InvalidParameter, "find_roots needs a nonconstant polynomial");
  std::vector<BivariatePolynomial> parts = squarefree_decomposition_in_y(p);
  std::vector<std::pair<CoefficientFn, int>> factors;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].y_degree() < 1) continue;
    BivariatePolynomial f = parts[k];
    factors.emplace_back([f](mpfr_prec_t prec) { return pi_coefficients(f, prec); }, static_cast<int>(k + 1));
  }
  return solve_factors(factors, opts);
}

FilterResult filter_points(std::span<const CertifiedRoot> roots, std::span<const GaussianRational> points,
                           double tol) {
  FilterResult out;
  for (const auto& r : roots) {
    mpfr_prec_t prec = r.center.prec();
    BigFloat t(tol, prec);
    bool matched = false;
    for (const auto& pt : points) {
      BigFloat dist = abs(r.center - BigComplex(pt, prec));
      if (dist + r.radius <= t) {
        matched = true;
        break;
      }
      if (dist - r.radius <= t) {
        throw Error(ErrorCode::AmbiguousRoot, "root disc around " + r.center.re.to_string(12) + "+" +
                                                  r.center.im.to_string(12) + "i straddles the tolerance ball of " +
                                                  pt.to_string());
      }
    }
    (matched ? out.matched : out.kept).push_back(r);
  }
  return out;
}

BigComplex evaluate(const Polynomial& p, const BigComplex& z) {
  BigComplex acc(z.prec());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= z;
    acc += BigComplex(*it, z.prec());
  }
  return acc;
}

BigComplex evaluate(const RationalFunction& f, const BigComplex& z) {
  return evaluate(f.num(), z) / evaluate(f.den(), z);
}

BigComplex evaluate(const BivariatePolynomial& f, const BigComplex& x, const BigComplex& y) {
  BigComplex acc(std::max(x.prec(), y.prec()));
  for (auto it = f.rows().rbegin(); it != f.rows().rend(); ++it) {
    acc *= y;
    acc += evaluate(*it, x);
  }
  return acc;
}

BigFloat magnitude_bound(const BivariatePolynomial& f, const BigFloat& ax, const BigFloat& ay) {
  mpfr_prec_t prec = std::max(ax.prec(), ay.prec());
  BigFloat acc(prec);
  for (auto it = f.rows().rbegin(); it != f.rows().rend(); ++it) {
    acc *= ay;
    BigFloat row(prec);
    for (auto c = it->coeffs().rbegin(); c != it->coeffs().rend(); ++c) {
      row *= ax;
      row += abs(BigComplex(*c, prec));
    }
    acc += row;
  }
  return acc;
}

BigFloat lipschitz_bound(const BivariatePolynomial& f, const BigFloat& ax, const BigFloat& ay) {
  mpfr_prec_t prec = std::max(ax.prec(), ay.prec());
  BigFloat acc(prec);
  for (std::size_t j = 0; j < f.rows().size(); ++j) {
    const auto& row = f.rows()[j].coeffs();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].is_zero()) continue;
      BigFloat m = abs(BigComplex(row[i], prec));
      BigFloat xi(1.0, prec);
      for (std::size_t k = 0; k + 1 < i; ++k) xi *= ax;
      BigFloat yj(1.0, prec);
      for (std::size_t k = 0; k + 1 < j; ++k) yj *= ay;
      // d/dx: i x^(i-1) y^j ; d/dy: j x^i y^(j-1)
      if (i > 0) acc += m * BigFloat(static_cast<double>(i), prec) * xi * (j > 0 ? yj * ay : BigFloat(1.0, prec));
      if (j > 0) acc += m * BigFloat(static_cast<double>(j), prec) * yj * (i > 0 ? xi * ax : BigFloat(1.0, prec));
    }
  }
  return acc;
}

Rational rationalize(const BigFloat& x, const Integer& max_den) {
  // Continued-fraction convergents h/k of x.
  mpfr_prec_t prec = x.prec();
  Integer h_prev = 1, h = 0, k_prev = 0, k = 1;
  BigFloat rest = x;
  Rational best(0);
  for (int step = 0; step < 200; ++step) {
    BigFloat fl(prec);
    mpfr_floor(fl.get(), rest.get());
    Integer a;
    mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
    Integer h_next = a * h_prev + h;
    Integer k_next = a * k_prev + k;
    if (step == 0) {
      h_next = a;
      k_next = 1;
      h = 1;
      k = 0;
    }
    if (k_next > max_den) break;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    best = Rational(h_prev, k_prev);
    best.canonicalize();
    BigFloat frac = rest - fl;
    if (frac.is_zero() || frac.exponent() < -static_cast<long>(prec) + 16) break;
    rest = BigFloat(1.0, prec) / frac;
  }
  return best;
}

namespace {

// Exact Gaussian-rational roots of p with multiplicities, or false.
bool gaussian_roots(const Polynomial& p, std::vector<FactoredRational::Factor>& out) {
  if (p.is_constant()) return true;
  RootOptions opts;
  opts.precision = 256;
  opts.target_radius = 1e-40;
  std::vector<CertifiedRoot> roots;
  try {
    roots = find_roots(p, opts);
  } catch (const Error&) {
    return false;
  }
  Integer max_den("1000000000000");
  for (const auto& r : roots) {
    GaussianRational cand(rationalize(r.center.re, max_den), rationalize(r.center.im, max_den));
    int m = multiplicity_at(p, cand);
    if (m != r.multiplicity) return false;
    out.push_back({cand, m});
  }
  return true;
}

}  // namespace

bool try_factor(const RationalFunction& f, FactoredRational& out) {
  if (f.is_zero()) return false;
  std::vector<FactoredRational::Factor> zeros;
  std::vector<FactoredRational::Factor> poles;
  if (!gaussian_roots(f.num(), zeros) || !gaussian_roots(f.den(), poles)) return false;
  for (auto& p : poles) {
    p.multiplicity = -p.multiplicity;
    zeros.push_back(p);
  }
  FactoredRational candidate(f.num().is_zero() ? GaussianRational(0) : f.num().leading(), zeros);
  if (candidate.expand() != f) return false;
  out = candidate;
  return true;
}

}  // namespace okaforge::numeric
