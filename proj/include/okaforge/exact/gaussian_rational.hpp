#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace okaforge {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or a signed variant. Throws ParseError.
Rational parse_rational(const std::string& text);
/// Always "num/den" with a positive denominator.
std::string rational_to_string(const Rational& q);

/// An element of Q(i). Both parts are kept canonical (lowest terms,
/// positive denominators) so equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  /// Builds re_num/re_den + (im_num/im_den) i.
  static GaussianRational from_fractions(long re_num, long re_den, long im_num = 0, long im_den = 1);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Lexicographic (re, im); only used to get canonical orderings.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

  GaussianRational pow(long e) const;

  /// Human form, e.g. "3/4-1/2i", "i", "-2". Re-parseable by parse_gaussian.
  std::string to_string() const;

  double re_double() const { return re_.get_d(); }
  double im_double() const { return im_.get_d(); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Accepts "a", "a/b", "a+bi", "a-b/ci", "i", "-i", "3i", "1/2i".
GaussianRational parse_gaussian(const std::string& text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace okaforge
