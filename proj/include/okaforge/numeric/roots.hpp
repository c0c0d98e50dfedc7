#pragma once

#include <functional>
#include <span>
#include <vector>

#include "okaforge/exact/bivariate.hpp"
#include "okaforge/exact/rational_function.hpp"
#include "okaforge/numeric/bigfloat.hpp"

namespace okaforge::numeric {

/// A root isolated in the disc |z - center| <= radius. The disc contains
/// exactly `multiplicity` roots counted with multiplicity, all equal.
struct CertifiedRoot {
  BigComplex center;
  BigFloat radius;
  int multiplicity = 1;
};

struct RootOptions {
  /// First rung of the precision ladder; each escalation multiplies by 4.
  mpfr_prec_t precision = 64;
  mpfr_prec_t max_precision = 1024;
  /// A root counts as certified once its inclusion radius is below this.
  double target_radius = 1e-11;
};

/// Roots of an exact polynomial. Multiplicities come from an exact
/// squarefree decomposition; each squarefree factor is solved by
/// simultaneous (Aberth-Ehrlich) iteration and certified with Weierstrass
/// inclusion discs. Throws InvalidParameter on a constant input and
/// PrecisionExhausted if certification fails at the top of the ladder.
std::vector<CertifiedRoot> find_roots(const Polynomial& p, const RootOptions& opts = {});

/// Roots in z of P(pi, z), where P is given as a bivariate polynomial whose
/// x variable stands for pi and y for z. Zero tests on coefficients are
/// exact because pi is transcendental over Q(i).
std::vector<CertifiedRoot> find_roots_pi(const BivariatePolynomial& p, const RootOptions& opts = {});

/// Roots of a squarefree polynomial whose coefficients (lowest degree first)
/// are produced at a requested precision. `coefficient_error` bounds the
/// relative error of the supplied coefficients in units of 2^-prec.
std::vector<CertifiedRoot> find_roots_squarefree(
    const std::function<std::vector<BigComplex>(mpfr_prec_t)>& coefficients, const RootOptions& opts = {});

struct FilterResult {
  std::vector<CertifiedRoot> kept;
  std::vector<CertifiedRoot> matched;
};

/// Separates roots lying within `tol` of one of the exact points from the
/// rest. A disc that straddles the boundary of a tol-ball raises AmbiguousRoot.
FilterResult filter_points(std::span<const CertifiedRoot> roots, std::span<const GaussianRational> points,
                           double tol);

/// Evaluates an exact polynomial at a high-precision point.
BigComplex evaluate(const Polynomial& p, const BigComplex& z);
BigComplex evaluate(const RationalFunction& f, const BigComplex& z);
/// F(x, y) for a bivariate polynomial.
BigComplex evaluate(const BivariatePolynomial& f, const BigComplex& x, const BigComplex& y);
/// sum |c_ij| |x|^i |y|^j: the scale against which evaluation error is measured.
BigFloat magnitude_bound(const BivariatePolynomial& f, const BigFloat& ax, const BigFloat& ay);
/// sum |c_ij| (i|x|^(i-1)|y|^j + j|x|^i|y|^(j-1)): a Lipschitz bound on a polydisc.
BigFloat lipschitz_bound(const BivariatePolynomial& f, const BigFloat& ax, const BigFloat& ay);

/// Nearest rational with denominator at most max_den (continued fractions).
Rational rationalize(const BigFloat& x, const Integer& max_den);

/// Writes f in factored form when all roots of its numerator and denominator
/// are Gaussian rationals (each candidate confirmed by exact division).
bool try_factor(const RationalFunction& f, FactoredRational& out);

}  // namespace okaforge::numeric
