#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "okaforge/domains.hpp"
#include "okaforge/exact/bivariate.hpp"
#include "okaforge/map_pair.hpp"
#include "okaforge/numeric/roots.hpp"

namespace okaforge {

/// Diagonal-free equations of the pullback curves f(x) = f(y), g(x) = g(y).
struct PairSystem {
  BivariatePolynomial ftilde;
  BivariatePolynomial gtilde;
};

/// (p(x) q(y) - p(y) q(x)) / (x - y) for f = p/q, divided exactly.
BivariatePolynomial diagonal_quotient(const RationalFunction& f);

/// Throws InvalidParameter when either component is constant.
PairSystem pair_system(const RationalFunction& f, const FactoredRational& g);

enum class Finiteness { Finite, InfiniteCommonComponent, CountableTruncated };

struct ComponentVerdict {
  Finiteness verdict = Finiteness::Finite;
  /// gcd(Ftilde, Gtilde); a nonzero constant when Finite.
  BivariatePolynomial witness;
};

ComponentVerdict common_component(const PairSystem& sys);

struct DoublePair {
  numeric::BigComplex x;
  numeric::BigComplex y;
  /// |f(x) - f(y)| + |g(x) - g(y)| at the reported centers.
  numeric::BigFloat residual;
  /// Certification radius of the coordinates.
  numeric::BigFloat radius;
  std::optional<int> k;
};

struct ExcludedPair {
  numeric::BigComplex x;
  numeric::BigComplex y;
  std::string reason;
  std::optional<int> k;
};

struct DoublePointReport {
  Finiteness finiteness = Finiteness::Finite;
  /// K for CountableTruncated, 0 otherwise.
  int truncation = 0;
  std::vector<DoublePair> pairs;
  std::vector<ExcludedPair> excluded;
  /// Common component when InfiniteCommonComponent.
  std::optional<BivariatePolynomial> witness;
  /// Elimination polynomial in x after removing puncture roots (rational branch).
  std::optional<Polynomial> elimination;
};

struct EnumerationOptions {
  double tol = 1e-10;
  mpfr_prec_t precision = 64;
  mpfr_prec_t max_precision = 1024;
};

/// Identified pairs of (f, g) on X. If the pair system has a common
/// component the report is InfiniteCommonComponent with no pairs. Throws
/// InternalInconsistency if the resultant vanishes identically anyway.
DoublePointReport enumerate_rational(const RationalFunction& f, const FactoredRational& g, const PuncturedPlane& X,
                                     const EnumerationOptions& opts = {});

/// Pairs (z, z + 2 pi i k / lambda), k = 1..K, identified by (f, exp(lambda z)).
DoublePointReport enumerate_exp(const RationalFunction& f, const Scalar& lambda, const PuncturedPlane& X, int K,
                                const EnumerationOptions& opts = {});

/// Dispatches on the second component.
DoublePointReport enumerate(const MapPair& map, const PuncturedPlane& X, int K, const EnumerationOptions& opts = {});

/// numerator(g) - a denominator(g), whose roots form the fiber g^-1(a).
Polynomial fiber_polynomial(const FactoredRational& g, const GaussianRational& a);

/// A value a whose fiber is simple and avoids the punctures; the first
/// candidates are 2, 3, 4, ... for seed 0, small Gaussian rationals otherwise.
GaussianRational find_regular_value(const FactoredRational& g, const PuncturedPlane& X, std::uint64_t seed = 0);

/// True when no point x of the fiber has f(x) equal to a critical value of f.
/// Exact, via Res_z(p - w q, p'q - pq') composed with f.
bool f_regular_on_fiber(const RationalFunction& f, const Polynomial& fiber);

struct FiberReport {
  bool injective = true;
  std::vector<numeric::CertifiedRoot> fiber;
  /// Indices into `fiber` of a colliding pair.
  std::optional<std::pair<std::size_t, std::size_t>> collision;
  mpfr_prec_t precision = 0;
};

/// Numeric separation of f on the fiber g^-1(a). A pair that cannot be
/// separated at the top of the precision ladder is reported as a collision;
/// AmbiguousFiber when a fiber disc cannot be bounded away from a pole of f.
FiberReport check_fiber_injectivity(const RationalFunction& f, const FactoredRational& g, const GaussianRational& a,
                                    const EnumerationOptions& opts = {});

std::string to_string(Finiteness f);

}  // namespace okaforge
