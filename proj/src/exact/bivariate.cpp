#include "okaforge/exact/bivariate.hpp"

#include <algorithm>
#include <sstream>

#include "okaforge/error.hpp"

namespace okaforge {

BivariatePolynomial::BivariatePolynomial(std::vector<Polynomial> rows) : rows_(std::move(rows)) { trim(); }

void BivariatePolynomial::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BivariatePolynomial BivariatePolynomial::constant(const GaussianRational& c) {
  return BivariatePolynomial({Polynomial::constant(c)});
}

BivariatePolynomial BivariatePolynomial::in_x(const Polynomial& p) { return BivariatePolynomial({p}); }

BivariatePolynomial BivariatePolynomial::in_y(const Polynomial& p) {
  std::vector<Polynomial> rows;
  rows.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) rows.push_back(Polynomial::constant(c));
  return BivariatePolynomial(std::move(rows));
}

BivariatePolynomial BivariatePolynomial::x_minus_y() {
  return BivariatePolynomial({Polynomial({GaussianRational(0), GaussianRational(1)}), Polynomial::constant(-1)});
}

int BivariatePolynomial::x_degree() const {
  int d = -1;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

int BivariatePolynomial::total_degree() const {
  int d = -1;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    if (!rows_[j].is_zero()) d = std::max(d, rows_[j].degree() + static_cast<int>(j));
  }
  return d;
}

GaussianRational BivariatePolynomial::coeff(std::size_t i, std::size_t j) const {
  return j < rows_.size() ? rows_[j].coeff(i) : GaussianRational(0);
}

const Polynomial& BivariatePolynomial::leading_y() const {
  if (rows_.empty()) throw Error(ErrorCode::InvalidParameter, "leading coefficient of zero polynomial");
  return rows_.back();
}

Polynomial BivariatePolynomial::at_x(const GaussianRational& x0) const {
  std::vector<GaussianRational> c;
  c.reserve(rows_.size());
  for (const auto& r : rows_) c.push_back(r(x0));
  return Polynomial(std::move(c));
}

Polynomial BivariatePolynomial::at_y(const GaussianRational& y0) const {
  Polynomial acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    acc *= y0;
    acc += *it;
  }
  return acc;
}

GaussianRational BivariatePolynomial::operator()(const GaussianRational& x0, const GaussianRational& y0) const {
  return at_x(x0)(y0);
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  int dx = x_degree();
  if (dx < 0) return {};
  std::vector<std::vector<GaussianRational>> cols(static_cast<std::size_t>(dx + 1),
                                                  std::vector<GaussianRational>(rows_.size()));
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const auto& c = rows_[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) cols[i][j] = c[i];
  }
  std::vector<Polynomial> out;
  out.reserve(cols.size());
  for (auto& c : cols) out.emplace_back(std::move(c));
  return BivariatePolynomial(std::move(out));
}

BivariatePolynomial BivariatePolynomial::normalized() const {
  if (rows_.empty()) return {};
  GaussianRational inv = rows_.back().leading().inverse();
  BivariatePolynomial r = *this;
  for (auto& row : r.rows_) row *= inv;
  return r;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t j = 0; j < o.rows_.size(); ++j) rows_[j] += o.rows_[j];
  trim();
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t j = 0; j < o.rows_.size(); ++j) rows_[j] -= o.rows_[j];
  trim();
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Polynomial> out(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.rows_.size(); ++j) out[i + j] += a.rows_[i] * b.rows_[j];
  }
  return BivariatePolynomial(std::move(out));
}

BivariatePolynomial BivariatePolynomial::operator*(const Polynomial& px) const {
  std::vector<Polynomial> out = rows_;
  for (auto& r : out) r *= px;
  return BivariatePolynomial(std::move(out));
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial r = *this;
  for (auto& row : r.rows_) row = -row;
  return r;
}

std::string BivariatePolynomial::to_string() const {
  if (rows_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = rows_.size(); j-- > 0;) {
    if (rows_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string ypow = j == 0 ? "" : (j == 1 ? "y" : "y^" + std::to_string(j));
    if (j == 0) {
      os << "(" << rows_[j].to_string("x") << ")";
    } else if (rows_[j] == Polynomial::constant(1)) {
      os << ypow;
    } else {
      os << "(" << rows_[j].to_string("x") << ")*" << ypow;
    }
  }
  return os.str();
}

Polynomial resultant_in_y(const BivariatePolynomial& f, const BivariatePolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::InvalidParameter, "resultant of a zero polynomial");
  if (f.y_degree() < 1 || g.y_degree() < 1) {
    throw Error(ErrorCode::DegenerateInput, "resultant in y needs positive y-degree on both inputs");
  }
  const std::size_t m = static_cast<std::size_t>(f.y_degree());
  const std::size_t n = static_cast<std::size_t>(g.y_degree());
  const std::size_t size = m + n;
  std::vector<std::vector<Polynomial>> mat(size, std::vector<Polynomial>(size));
  // n shifted copies of f's coefficients (highest power first), then m of g's.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) mat[r][r + k] = f.rows()[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) mat[n + r][r + k] = g.rows()[n - k];
  }

  bool negate = false;
  Polynomial prev = Polynomial::constant(1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (mat[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < size && mat[pivot][k].is_zero()) ++pivot;
      if (pivot == size) return {};
      std::swap(mat[k], mat[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        Polynomial t = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j];
        mat[i][j] = exact_div(t, prev);
      }
      mat[i][k] = Polynomial();
    }
    prev = mat[k][k];
  }
  Polynomial det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

Polynomial content_in_y(const BivariatePolynomial& f) {
  Polynomial c;
  for (const auto& r : f.rows()) {
    if (r.is_zero()) continue;
    c = c.is_zero() ? r.monic() : poly_gcd(c, r);
    if (c.is_constant()) break;
  }
  return c;
}

namespace {

BivariatePolynomial divide_rows(const BivariatePolynomial& f, const Polynomial& c) {
  std::vector<Polynomial> rows;
  rows.reserve(f.rows().size());
  for (const auto& r : f.rows()) rows.push_back(exact_div(r, c));
  return BivariatePolynomial(std::move(rows));
}

}  // namespace

BivariatePolynomial primitive_part(const BivariatePolynomial& f) {
  if (f.is_zero()) return f;
  Polynomial c = content_in_y(f);
  return c.is_constant() ? f : divide_rows(f, c);
}

namespace {

// lc(b)^k * a reduced modulo b in y; only used up to units in Q(i)[x].
BivariatePolynomial pseudo_remainder(BivariatePolynomial a, const BivariatePolynomial& b) {
  const Polynomial& lb = b.leading_y();
  const int db = b.y_degree();
  while (!a.is_zero() && a.y_degree() >= db) {
    int shift = a.y_degree() - db;
    std::vector<Polynomial> mono(static_cast<std::size_t>(shift + 1));
    mono[static_cast<std::size_t>(shift)] = a.leading_y();
    a = a * lb - BivariatePolynomial(std::move(mono)) * b;
  }
  return a;
}

}  // namespace

BivariatePolynomial bivariate_gcd(const BivariatePolynomial& f, const BivariatePolynomial& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  Polynomial cf = content_in_y(f);
  Polynomial cg = content_in_y(g);
  Polynomial content = poly_gcd(cf, cg);

  BivariatePolynomial a = divide_rows(f, cf);
  BivariatePolynomial b = divide_rows(g, cg);
  if (a.y_degree() < b.y_degree()) std::swap(a, b);
  while (!b.is_zero() && b.y_degree() > 0) {
    BivariatePolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  // b == 0: a is the primitive gcd. b of y-degree 0 (nonzero): coprime.
  BivariatePolynomial prim = b.is_zero() ? primitive_part(a) : BivariatePolynomial::constant(1);
  return (prim * content).normalized();
}

BivariatePolynomial exact_div(const BivariatePolynomial& f, const BivariatePolynomial& d) {
  if (d.is_zero()) throw Error(ErrorCode::InvalidParameter, "bivariate division by zero");
  if (!d.leading_y().is_constant()) {
    throw Error(ErrorCode::InvalidParameter, "bivariate division needs a constant leading y-coefficient");
  }
  GaussianRational inv = d.leading_y().leading().inverse();
  const int dd = d.y_degree();
  BivariatePolynomial rem = f;
  std::vector<Polynomial> quot(static_cast<std::size_t>(std::max(0, f.y_degree() - dd + 1)));
  while (!rem.is_zero() && rem.y_degree() >= dd) {
    int shift = rem.y_degree() - dd;
    Polynomial q = rem.leading_y() * inv;
    std::vector<Polynomial> mono(static_cast<std::size_t>(shift + 1));
    mono[static_cast<std::size_t>(shift)] = q;
    rem -= BivariatePolynomial(std::move(mono)) * d;
    quot[static_cast<std::size_t>(shift)] += q;
  }
  if (!rem.is_zero()) throw Error(ErrorCode::InternalInconsistency, "inexact bivariate division");
  return BivariatePolynomial(std::move(quot));
}

BivariatePolynomial derivative_y(const BivariatePolynomial& f) {
  if (f.y_degree() < 1) return {};
  std::vector<Polynomial> rows;
  for (std::size_t j = 1; j < f.rows().size(); ++j) {
    rows.push_back(f.rows()[j] * GaussianRational(static_cast<long>(j)));
  }
  return BivariatePolynomial(std::move(rows));
}

BivariatePolynomial pseudo_exact_div(const BivariatePolynomial& f, const BivariatePolynomial& d) {
  if (d.is_zero()) throw Error(ErrorCode::InvalidParameter, "bivariate division by zero");
  const Polynomial& ld = d.leading_y();
  const int dd = d.y_degree();
  BivariatePolynomial rem = f;
  BivariatePolynomial quot;
  while (!rem.is_zero() && rem.y_degree() >= dd) {
    int shift = rem.y_degree() - dd;
    std::vector<Polynomial> mono(static_cast<std::size_t>(shift + 1));
    mono[static_cast<std::size_t>(shift)] = rem.leading_y();
    BivariatePolynomial lead(std::move(mono));
    rem = rem * ld - lead * d;
    quot = quot * ld + lead;
  }
  if (!rem.is_zero()) throw Error(ErrorCode::InternalInconsistency, "inexact bivariate pseudo-division");
  return primitive_part(quot);
}

std::vector<BivariatePolynomial> squarefree_decomposition_in_y(const BivariatePolynomial& f) {
  std::vector<BivariatePolynomial> out;
  if (f.y_degree() < 1) return out;
  // chain[k] carries the roots of multiplicity > k, each with multiplicity reduced by k.
  std::vector<BivariatePolynomial> chain{primitive_part(f)};
  while (chain.back().y_degree() > 0) {
    chain.push_back(primitive_part(bivariate_gcd(chain.back(), derivative_y(chain.back()))));
  }
  // at_least[k]: squarefree polynomial of the roots with multiplicity >= k+1.
  std::vector<BivariatePolynomial> at_least;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) at_least.push_back(pseudo_exact_div(chain[k], chain[k + 1]));
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    if (k + 1 < at_least.size()) {
      out.push_back(pseudo_exact_div(at_least[k], at_least[k + 1]));
    } else {
      out.push_back(at_least[k]);
    }
  }
  while (!out.empty() && out.back().y_degree() < 1) out.pop_back();
  return out;
}

}  // namespace okaforge
