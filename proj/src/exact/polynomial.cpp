#include "okaforge/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "okaforge/error.hpp"

namespace okaforge {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<GaussianRational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const GaussianRational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t k, const GaussianRational& c) {
  std::vector<GaussianRational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const GaussianRational& root) { return Polynomial({-root, GaussianRational(1)}); }

Polynomial Polynomial::from_roots(std::span<const GaussianRational> roots) {
  Polynomial p = constant(1);
  for (const auto& r : roots) p *= linear(r);
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : GaussianRational(0);
}

const GaussianRational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidParameter, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

GaussianRational Polynomial::operator()(const GaussianRational& z) const {
  GaussianRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  GaussianRational inv = leading().inverse();
  Polynomial r = *this;
  r *= inv;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

Polynomial Polynomial::shifted(const GaussianRational& shift) const {
  return compose(Polynomial({shift, GaussianRational(1)}));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

namespace {

std::string coefficient_text(const GaussianRational& c) {
  if (c.is_real()) return c.re().get_str();
  if (sgn(c.re()) == 0) {
    if (c.im() == 1) return "i";
    if (c.im() == -1) return "-i";
    return c.im().get_str() + "*i";
  }
  std::string s = "(" + c.re().get_str();
  s += sgn(c.im()) < 0 ? "-" : "+";
  Rational a = abs(c.im());
  if (a != 1) s += a.get_str() + "*";
  s += "i)";
  return s;
}

}  // namespace

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const GaussianRational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    GaussianRational shown = c;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) shown = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0) {
      os << coefficient_text(shown);
    } else if (shown.is_one()) {
      os << mono;
    } else {
      os << coefficient_text(shown) << "*" << mono;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidParameter, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<GaussianRational> rem = a.coeffs();
  std::vector<GaussianRational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  GaussianRational inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    GaussianRational q = rem[k + db] * inv;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    quot[k] = std::move(q);
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InternalInconsistency, "inexact polynomial division");
  return q;
}

bool divides(const Polynomial& d, const Polynomial& a) { return divmod(a, d).second.is_zero(); }

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::InvalidParameter, "gcd(0, 0) is undefined");
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_constant()) return p.monic();
  return exact_div(p.monic(), poly_gcd(p, p.derivative()));
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.is_constant()) return out;
  Polynomial f = p.monic();
  Polynomial fp = f.derivative();
  Polynomial a = poly_gcd(f, fp);
  Polynomial b = exact_div(f, a);
  Polynomial c = exact_div(fp, a);
  Polynomial d = c - b.derivative();
  while (!b.is_constant()) {
    Polynomial g = poly_gcd(b, d);
    out.push_back(g);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().is_constant()) out.pop_back();
  return out;
}

int multiplicity_at(const Polynomial& p, const GaussianRational& a) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidParameter, "multiplicity in the zero polynomial");
  int m = 0;
  Polynomial cur = p;
  Polynomial lin = Polynomial::linear(a);
  while (!cur.is_constant() && cur(a).is_zero()) {
    cur = exact_div(cur, lin);
    ++m;
  }
  return m;
}

Polynomial strip_common_roots(Polynomial p, const Polynomial& points) {
  if (p.is_zero() || points.is_constant()) return p;
  for (;;) {
    Polynomial g = poly_gcd(p, points);
    if (g.is_constant()) return p;
    p = exact_div(p, g);
  }
}

}  // namespace okaforge
