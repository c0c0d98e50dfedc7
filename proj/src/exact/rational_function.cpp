#include "okaforge/exact/rational_function.hpp"

#include <algorithm>
#include <sstream>

#include "okaforge/error.hpp"

namespace okaforge {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidParameter, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = poly_gcd(num, den);
  Polynomial n = exact_div(num, g);
  Polynomial d = exact_div(den, g);
  GaussianRational inv = d.leading().inverse();
  num_ = n * inv;
  den_ = d * inv;
}

GaussianRational RationalFunction::operator()(const GaussianRational& z) const {
  GaussianRational d = den_(z);
  if (d.is_zero()) throw Error(ErrorCode::InvalidParameter, "evaluation at a pole " + z.to_string());
  return num_(z) / d;
}

Polynomial RationalFunction::derivative_numerator() const {
  return num_.derivative() * den_ - num_ * den_.derivative();
}

RationalFunction RationalFunction::derivative() const {
  return {derivative_numerator(), den_ * den_};
}

int RationalFunction::order_at(const GaussianRational& a) const {
  if (is_zero()) throw Error(ErrorCode::InvalidParameter, "order of the zero function");
  return multiplicity_at(num_, a) - multiplicity_at(den_, a);
}

int RationalFunction::order_at_infinity() const {
  if (is_zero()) throw Error(ErrorCode::InvalidParameter, "order of the zero function");
  return den_.degree() - num_.degree();
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
  // P(N/D)/Q(N/D) = (sum p_k N^k D^(dp-k)) / (sum q_k N^k D^(dq-k)) * D^(dq-dp)
  const Polynomial& n = inner.num();
  const Polynomial& d = inner.den();
  auto homogenise = [&](const Polynomial& p) {
    Polynomial acc;
    int deg = p.degree();
    for (int k = 0; k <= deg; ++k) {
      const GaussianRational& c = p.coeffs()[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      acc += c * (n.pow(static_cast<unsigned>(k)) * d.pow(static_cast<unsigned>(deg - k)));
    }
    return acc;
  };
  if (is_zero()) return {};
  Polynomial top = homogenise(num_);
  Polynomial bottom = homogenise(den_);
  int shift = den_.degree() - num_.degree();
  if (shift >= 0) {
    top *= d.pow(static_cast<unsigned>(shift));
  } else {
    bottom *= d.pow(static_cast<unsigned>(-shift));
  }
  return {top, bottom};
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  return *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  return *this = RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidParameter, "division by the zero rational function");
  return *this = RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw Error(ErrorCode::InvalidParameter, "negative power of zero");
    return RationalFunction(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
  }
  return {num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e))};
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.is_constant()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

FactoredRational::FactoredRational(GaussianRational scale, std::vector<Factor> factors)
    : scale_(std::move(scale)) {
  if (scale_.is_zero()) throw Error(ErrorCode::InvalidParameter, "factored rational with zero scale");
  for (auto& f : factors) {
    auto it = std::find_if(factors_.begin(), factors_.end(), [&](const Factor& g) { return g.root == f.root; });
    if (it != factors_.end()) {
      it->multiplicity += f.multiplicity;
    } else {
      factors_.push_back(std::move(f));
    }
  }
  std::erase_if(factors_, [](const Factor& f) { return f.multiplicity == 0; });
}

bool operator==(const FactoredRational& a, const FactoredRational& b) {
  if (a.scale_ != b.scale_ || a.factors_.size() != b.factors_.size()) return false;
  return std::all_of(a.factors_.begin(), a.factors_.end(),
                     [&](const FactoredRational::Factor& f) { return b.order_at(f.root) == f.multiplicity; });
}

int FactoredRational::order_at(const GaussianRational& a) const {
  for (const auto& f : factors_) {
    if (f.root == a) return f.multiplicity;
  }
  return 0;
}

int FactoredRational::order_at_infinity() const {
  int s = 0;
  for (const auto& f : factors_) s += f.multiplicity;
  return -s;
}

RationalFunction FactoredRational::expand() const {
  Polynomial num = Polynomial::constant(scale_);
  Polynomial den = Polynomial::constant(1);
  for (const auto& f : factors_) {
    Polynomial lin = Polynomial::linear(f.root);
    if (f.multiplicity > 0) {
      num *= lin.pow(static_cast<unsigned>(f.multiplicity));
    } else {
      den *= lin.pow(static_cast<unsigned>(-f.multiplicity));
    }
  }
  return {num, den};
}

Polynomial FactoredRational::log_derivative_numerator() const {
  Polynomial acc;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    Polynomial term = Polynomial::constant(GaussianRational(factors_[j].multiplicity));
    for (std::size_t l = 0; l < factors_.size(); ++l) {
      if (l != j) term *= Polynomial::linear(factors_[l].root);
    }
    acc += term;
  }
  return acc;
}

GaussianRational FactoredRational::operator()(const GaussianRational& z) const {
  GaussianRational acc = scale_;
  for (const auto& f : factors_) {
    GaussianRational d = z - f.root;
    if (d.is_zero()) {
      if (f.multiplicity < 0) throw Error(ErrorCode::InvalidParameter, "evaluation at a pole " + z.to_string());
      return GaussianRational(0);
    }
    acc *= d.pow(f.multiplicity);
  }
  return acc;
}

FactoredRational FactoredRational::compose_affine(const GaussianRational& alpha,
                                                  const GaussianRational& beta) const {
  if (alpha.is_zero()) throw Error(ErrorCode::InvalidParameter, "affine reparametrisation with alpha = 0");
  // (alpha z + beta - r) = alpha (z - (r - beta)/alpha)
  GaussianRational s = scale_;
  std::vector<Factor> out;
  for (const auto& f : factors_) {
    s *= alpha.pow(f.multiplicity);
    out.push_back({(f.root - beta) / alpha, f.multiplicity});
  }
  return {s, std::move(out)};
}

FactoredRational FactoredRational::times(const FactoredRational& o) const {
  std::vector<Factor> all = factors_;
  all.insert(all.end(), o.factors_.begin(), o.factors_.end());
  return {scale_ * o.scale_, std::move(all)};
}

FactoredRational FactoredRational::scaled(const GaussianRational& c) const { return {scale_ * c, factors_}; }

std::string FactoredRational::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  if (!scale_.is_one() || factors_.empty()) {
    os << (scale_.is_real() ? scale_.to_string() : "(" + Polynomial::constant(scale_).to_string() + ")");
    first = false;
  }
  for (const auto& f : factors_) {
    if (!first) os << "*";
    first = false;
    os << "(" << Polynomial::linear(f.root).to_string(var) << ")";
    if (f.multiplicity != 1) os << "^" << f.multiplicity;
  }
  return os.str();
}

}  // namespace okaforge
