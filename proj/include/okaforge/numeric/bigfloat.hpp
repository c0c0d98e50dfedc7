#pragma once

#include <mpfr.h>

#include <string>

#include "okaforge/exact/gaussian_rational.hpp"

namespace okaforge::numeric {

/// RAII wrapper over an MPFR value with a fixed per-object precision.
/// Binary operations produce a result at the larger of the two precisions;
/// all rounding is to nearest.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(double v, mpfr_prec_t prec);
  BigFloat(const Rational& q, mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat pi(mpfr_prec_t prec);
  /// 2^e at the given precision.
  static BigFloat pow2(long e, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 30) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent (value in [2^(e-1), 2^e)); very negative for zero.
  long exponent() const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);
/// Same value re-rounded to a new precision.
BigFloat with_prec(const BigFloat& x, mpfr_prec_t prec);

struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(const GaussianRational& z, mpfr_prec_t prec) : re(z.re(), prec), im(z.im(), prec) {}

  mpfr_prec_t prec() const { return re.prec(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  BigComplex operator-() const { return {-re, -im}; }
  BigComplex conj() const { return {re, -im}; }
};

BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z);  // |z|^2
BigComplex exp(const BigComplex& z);
BigComplex with_prec(const BigComplex& z, mpfr_prec_t prec);

}  // namespace okaforge::numeric
