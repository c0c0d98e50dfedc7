#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "okaforge/exact/gaussian_rational.hpp"

namespace okaforge {

/// Univariate polynomial over Q(i), coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coeffs);
  Polynomial(std::initializer_list<GaussianRational> coeffs);

  static Polynomial constant(const GaussianRational& c);
  /// The monomial c * z^k.
  static Polynomial monomial(std::size_t k, const GaussianRational& c = GaussianRational(1));
  /// z - root.
  static Polynomial linear(const GaussianRational& root);
  /// prod (z - r) over the given roots.
  static Polynomial from_roots(std::span<const GaussianRational> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  /// Coefficient of z^k; zero beyond the degree.
  GaussianRational coeff(std::size_t k) const;
  const GaussianRational& leading() const;

  GaussianRational operator()(const GaussianRational& z) const;
  Polynomial derivative() const;
  /// Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;
  /// this(inner(z)).
  Polynomial compose(const Polynomial& inner) const;
  /// this(z + shift).
  Polynomial shifted(const GaussianRational& shift) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Infix text in the variable `var`, e.g. "z^2 - 2*z + 1". Re-parseable.
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

/// Quotient and remainder of a / b. Throws InvalidParameter when b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// a / b, throwing InternalInconsistency if the remainder is nonzero.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& a);

/// Monic gcd; gcd(0, 0) is rejected with InvalidParameter.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
Polynomial squarefree_part(const Polynomial& p);

/// Yun decomposition: p = lc * prod_k factors[k]^(k+1), each factor monic and
/// squarefree, pairwise coprime. Trailing unit factors are dropped.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

/// Largest e with (z - a)^e dividing p (p nonzero).
int multiplicity_at(const Polynomial& p, const GaussianRational& a);

/// Removes from p every root that is a root of `points`, with full
/// multiplicity, by iterated exact division.
Polynomial strip_common_roots(Polynomial p, const Polynomial& points);

}  // namespace okaforge
