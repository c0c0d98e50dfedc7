#pragma once

#include <limits>
#include <string>
#include <vector>

#include "okaforge/exact/polynomial.hpp"

namespace okaforge {

/// num/den over Q(i) in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(const Polynomial& p)  // NOLINT(google-explicit-constructor)
      : num_(p), den_(Polynomial::constant(1)) {}
  /// Reduces to lowest terms. Throws InvalidParameter on a zero denominator.
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction identity() { return {Polynomial({GaussianRational(0), GaussianRational(1)})}; }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Throws InvalidParameter at a pole.
  GaussianRational operator()(const GaussianRational& z) const;
  RationalFunction derivative() const;
  /// p'q - pq', the numerator of the derivative before reduction.
  Polynomial derivative_numerator() const;

  /// Order of vanishing at a finite point (negative at poles).
  int order_at(const GaussianRational& a) const;
  /// deg den - deg num. Throws on the zero function.
  int order_at_infinity() const;

  /// this(inner(z)).
  RationalFunction compose(const RationalFunction& inner) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const { return {-num_, den_}; }
  RationalFunction pow(int e) const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string(const std::string& var = "z") const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// scale * prod (z - root)^multiplicity with pairwise distinct roots and
/// nonzero multiplicities.
class FactoredRational {
 public:
  struct Factor {
    GaussianRational root;
    int multiplicity;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  FactoredRational() = default;
  /// Merges repeated roots and drops zero multiplicities. Throws
  /// InvalidParameter on a zero scale.
  FactoredRational(GaussianRational scale, std::vector<Factor> factors);

  const GaussianRational& scale() const { return scale_; }
  const std::vector<Factor>& factors() const { return factors_; }

  /// Multiplicity at a (0 when a is not a listed root).
  int order_at(const GaussianRational& a) const;
  /// -(sum of multiplicities).
  int order_at_infinity() const;
  bool is_constant() const { return factors_.empty(); }

  RationalFunction expand() const;
  /// Numerator of g'/g written over prod (z - root): sum_j m_j prod_{l != j} (z - r_l).
  Polynomial log_derivative_numerator() const;
  /// Value at z, exact. Throws InvalidParameter at a pole.
  GaussianRational operator()(const GaussianRational& z) const;

  /// g(alpha z + beta) written again in factored form.
  FactoredRational compose_affine(const GaussianRational& alpha, const GaussianRational& beta) const;
  FactoredRational times(const FactoredRational& o) const;
  FactoredRational scaled(const GaussianRational& c) const;

  /// Same scale and the same (root, multiplicity) set; factor order is ignored.
  friend bool operator==(const FactoredRational& a, const FactoredRational& b);

  /// e.g. "(z-1)^2*(z-2)^-1"; re-parseable.
  std::string to_string(const std::string& var = "z") const;

 private:
  GaussianRational scale_{1};
  std::vector<Factor> factors_;
};

}  // namespace okaforge
