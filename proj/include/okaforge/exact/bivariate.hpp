#pragma once

#include <string>
#include <vector>

#include "okaforge/exact/polynomial.hpp"

namespace okaforge {

/// Polynomial in (x, y) over Q(i), stored as a polynomial in y whose
/// coefficients are polynomials in x. No trailing zero rows.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  /// rows[j] is the coefficient of y^j.
  explicit BivariatePolynomial(std::vector<Polynomial> rows);

  static BivariatePolynomial constant(const GaussianRational& c);
  static BivariatePolynomial in_x(const Polynomial& p);
  static BivariatePolynomial in_y(const Polynomial& p);
  /// The polynomial x - y.
  static BivariatePolynomial x_minus_y();

  bool is_zero() const { return rows_.empty(); }
  bool is_constant() const { return rows_.size() <= 1 && (rows_.empty() || rows_[0].is_constant()); }
  int y_degree() const { return static_cast<int>(rows_.size()) - 1; }
  int x_degree() const;
  int total_degree() const;

  /// Coefficient of x^i y^j.
  GaussianRational coeff(std::size_t i, std::size_t j) const;
  const std::vector<Polynomial>& rows() const { return rows_; }
  const Polynomial& leading_y() const;

  /// F(x0, y) as a polynomial in y.
  Polynomial at_x(const GaussianRational& x0) const;
  /// F(x, y0) as a polynomial in x.
  Polynomial at_y(const GaussianRational& y0) const;
  GaussianRational operator()(const GaussianRational& x0, const GaussianRational& y0) const;

  BivariatePolynomial swapped() const;
  /// Makes the leading coefficient (highest y power, then highest x power)
  /// equal to 1.
  BivariatePolynomial normalized() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  BivariatePolynomial operator*(const Polynomial& px) const;  // multiply by a polynomial in x
  BivariatePolynomial operator-() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Polynomial> rows_;
};

/// Sylvester-determinant resultant eliminating y, computed by fraction-free
/// (Bareiss) elimination over Q(i)[x]. Throws DegenerateInput if either input
/// has y-degree 0, InvalidParameter if either is zero.
Polynomial resultant_in_y(const BivariatePolynomial& f, const BivariatePolynomial& g);

/// gcd in Q(i)[x, y], normalized as BivariatePolynomial::normalized().
BivariatePolynomial bivariate_gcd(const BivariatePolynomial& f, const BivariatePolynomial& g);

/// f / d where d's leading y-coefficient is a nonzero constant. Throws
/// InternalInconsistency on a nonzero remainder.
BivariatePolynomial exact_div(const BivariatePolynomial& f, const BivariatePolynomial& d);

/// gcd of the y-coefficients (a polynomial in x, monic).
Polynomial content_in_y(const BivariatePolynomial& f);
BivariatePolynomial primitive_part(const BivariatePolynomial& f);

BivariatePolynomial derivative_y(const BivariatePolynomial& f);

/// Q with lc_y(d)^k f = Q d, returned as a primitive polynomial. Only the
/// class of Q up to units of Q(i)(x) is meaningful. Throws
/// InternalInconsistency when d does not divide f over Q(i)(x).
BivariatePolynomial pseudo_exact_div(const BivariatePolynomial& f, const BivariatePolynomial& d);

/// Squarefree decomposition over Q(i)(x): result[k] collects the factors of
/// multiplicity k+1 in y, up to units of Q(i)(x).
std::vector<BivariatePolynomial> squarefree_decomposition_in_y(const BivariatePolynomial& f);

}  // namespace okaforge
