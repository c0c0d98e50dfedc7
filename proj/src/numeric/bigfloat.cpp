#include "okaforge/numeric/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace okaforge::numeric {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.prec());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  if (mpfr_zero_p(v_)) return "0";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

long BigFloat::exponent() const {
  if (mpfr_zero_p(v_)) return -(1L << 30);
  return mpfr_get_exp(v_);
}

namespace {
mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(x.prec(), y.prec()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat with_prec(const BigFloat& x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  BigFloat d = o.re * o.re + o.im * o.im;
  BigFloat r = (re * o.re + im * o.im) / d;
  BigFloat i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigFloat abs(const BigComplex& z) {
  BigFloat r(z.prec());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

BigComplex with_prec(const BigComplex& z, mpfr_prec_t prec) { return {with_prec(z.re, prec), with_prec(z.im, prec)}; }

}  // namespace okaforge::numeric
