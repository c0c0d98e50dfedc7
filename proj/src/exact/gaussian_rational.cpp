#include "okaforge/exact/gaussian_rational.hpp"

#include <cctype>
#include <ostream>

#include "okaforge/error.hpp"

namespace okaforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::WrongBranch: return "WrongBranch";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::InvalidSecondComponent: return "InvalidSecondComponent";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::AmbiguousRoot: return "AmbiguousRoot";
    case ErrorCode::AmbiguousFiber: return "AmbiguousFiber";
    case ErrorCode::AmbiguousBoundary: return "AmbiguousBoundary";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ShiftTooLarge: return "ShiftTooLarge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  std::size_t start = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  auto slash = t.find('/');
  auto digits_ok = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(start, t.size())) throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  } else if (!digits_ok(start, slash) || !digits_ok(slash + 1, t.size())) {
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  }
  if (t[0] == '+') t.erase(0, 1);
  Rational q;
  if (q.set_str(t, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianRational GaussianRational::from_fractions(long re_num, long re_den, long im_num, long im_den) {
  return {Rational(re_num, re_den), Rational(im_num, im_den)};
}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw Error(ErrorCode::InvalidParameter, "division by zero Gaussian rational");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw Error(ErrorCode::InvalidParameter, "division by zero Gaussian rational");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

GaussianRational GaussianRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  GaussianRational result(1);
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  Rational a = abs(im_);
  if (a != 1) imag = a.get_str();
  imag += "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

GaussianRational parse_gaussian(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw Error(ErrorCode::ParseError, "empty complex number");
  if (t.back() != 'i') return {parse_rational(t)};
  t.pop_back();
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if (t[k] == '+' || t[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : t.substr(0, split);
  std::string im_part = split == std::string::npos ? t : t.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return {re, parse_rational(im_part)};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace okaforge
