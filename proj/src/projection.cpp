#include "okaforge/projection.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "okaforge/constructors.hpp"
#include "okaforge/error.hpp"

namespace okaforge {

namespace {

using numeric::BigComplex;
using numeric::BigFloat;

std::complex<double> to_complex(const GaussianRational& z) { return {z.re_double(), z.im_double()}; }

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

void settle(ProjectionCertificate& c) {
  bool ok = std::all_of(c.pairs.begin(), c.pairs.end(), [](const PairWitness& w) { return sgn(w.value) != 0; });
  if (!ok) c.verdict = Verdict::Fail;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> ProjectionCertificate::offending() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& w : pairs) {
    if (sgn(w.value) == 0) out.emplace_back(w.i, w.j);
  }
  return out;
}

ProjectionCertificate theta_certificate(const FactoredRational& g, std::span<const GaussianRational> b) {
  ProjectionCertificate c;
  c.flavor = ProjectionFlavor::CStar;
  c.pattern = ProjectionPattern::DistinctThetas;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (g.order_at(b[i]) != -1) {
      throw Error(ErrorCode::InvalidParameter, "second component lacks a simple pole at " + b[i].to_string());
    }
    GaussianRational u = g.scale();
    for (const auto& f : g.factors()) {
      if (f.root == b[i]) continue;
      u *= (b[i] - f.root).pow(f.multiplicity);
    }
    c.theta.push_back(u);
    c.escape.push_back({i, b[i], -1});
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      c.pairs.push_back({i, j, (c.theta[i] * c.theta[j].conj()).im()});
    }
  }
  settle(c);
  return c;
}

ProjectionCertificate d_certificate(const RationalFunction& f, const GaussianRational& d,
                                    std::span<const GaussianRational> b, const Rational& min_modulus) {
  ProjectionCertificate c;
  c.flavor = ProjectionFlavor::C;
  c.pattern = ProjectionPattern::GenericD;
  c.d = d;
  for (std::size_t i = 0; i < b.size(); ++i) {
    int order = f.order_at(b[i]);
    c.escape.push_back({i, b[i], order});
    if (order >= 0) c.verdict = Verdict::Fail;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      c.pairs.push_back({i, j, ((d - b[i]) * (b[j] - b[i]).conj()).im()});
    }
  }
  if (d.norm() < min_modulus * min_modulus || d.norm() <= 1) c.verdict = Verdict::Fail;
  settle(c);
  return c;
}

ProjectionCertificate split_certificate(const FactoredRational& g, std::span<const GaussianRational> b) {
  ProjectionCertificate c;
  c.flavor = ProjectionFlavor::CStar;
  c.pattern = ProjectionPattern::ZeroInfinitySplit;
  std::vector<int> orders;
  for (std::size_t i = 0; i < b.size(); ++i) {
    orders.push_back(g.order_at(b[i]));
    c.escape.push_back({i, b[i], orders.back()});
  }
  std::sort(orders.begin(), orders.end());
  if (orders != std::vector<int>{-1, 1}) c.verdict = Verdict::Fail;
  return c;
}

Remediation remediate_thetas(const FactoredRational& g, std::span<const GaussianRational> b,
                             std::span<const GaussianRational> avoid, std::uint64_t seed, int budget) {
  ProjectionCertificate first = theta_certificate(g, b);
  if (b.size() <= 1) return {g, std::nullopt, first, {}};
  if (first.passed()) throw Error(ErrorCode::PreconditionViolated, "theta test already passes");
  Remediation out{g, std::nullopt, first, {}};
  Rational min_modulus(8);
  for (int t = 0; t < budget; ++t, min_modulus *= 2) {
    GaussianRational d = pick_generic_d(b, min_modulus, seed + static_cast<std::uint64_t>(t));
    bool clash = std::find(avoid.begin(), avoid.end(), d) != avoid.end() || g.order_at(d) != 0;
    if (!clash) {
      FactoredRational candidate = g.times(FactoredRational(1, {{d, 1}}));
      ProjectionCertificate cert = theta_certificate(candidate, b);
      if (cert.passed()) {
        out.g = candidate;
        out.d = d;
        out.certificate = cert;
        return out;
      }
    }
    out.rejected.push_back(d);
  }
  throw Error(ErrorCode::SearchExhausted, "no d on the ladder separates the theta directions");
}

ClearanceReport boundary_clearance(const DoublePointReport& report, const PuncturedCircularDomain& D) {
  if (report.finiteness != Finiteness::Finite) {
    throw Error(ErrorCode::InvalidParameter, "boundary clearance needs a finite double point set");
  }
  struct Circle {
    GaussianRational center;
    Rational radius;
  };
  std::vector<Circle> circles = {{GaussianRational(0), Rational(1)}};
  for (const auto& h : D.holes) circles.push_back({h.center, h.radius});

  ClearanceReport out;
  for (std::size_t k = 0; k < report.pairs.size(); ++k) {
    const DoublePair& pair = report.pairs[k];
    for (int coord = 0; coord < 2; ++coord) {
      const BigComplex& p = coord == 0 ? pair.x : pair.y;
      mpfr_prec_t prec = p.prec();
      for (std::size_t ci = 0; ci < circles.size(); ++ci) {
        BigComplex c(circles[ci].center, prec);
        BigFloat r(circles[ci].radius, prec);
        BigFloat dist = abs(abs(p - c) - r);
        BigFloat err = BigFloat::pow2(6 - static_cast<long>(prec), prec) *
                       (abs(p) + abs(c) + r + BigFloat(1.0, prec));
        if (abs(dist - pair.radius) <= err) {
          throw Error(ErrorCode::AmbiguousBoundary, "double point at the certification radius of a boundary circle");
        }
        if (dist < pair.radius) {
          out.verdict = Verdict::Fail;
          out.violations.push_back({k, coord, ci, dist.to_double()});
        }
      }
    }
  }
  return out;
}

ReshapeMap build_reshape(std::span<const GaussianRational> punctures, const GaussianRational& x,
                         const GaussianRational& x_j, const ReshapeOptions& opts) {
  Polynomial w = puncture_polynomial(punctures);
  GaussianRational wx = w(x_j);
  if (wx.is_zero()) throw Error(ErrorCode::InvalidParameter, "approximant " + x_j.to_string() + " is a puncture");
  ReshapeMap out{w * ((x - x_j) / wx), x, x_j, 0};
  if (out.v.is_zero()) return out;

  Polynomial dv = out.v.derivative();
  std::vector<std::complex<double>> c1;
  double l1 = 0;
  double l2 = 0;
  for (std::size_t k = 0; k < dv.coeffs().size(); ++k) {
    c1.push_back(to_complex(dv.coeffs()[k]));
    l1 += std::abs(c1.back());
    l2 += static_cast<double>(k) * std::abs(c1.back());
  }
  // |d/dtheta v'(e^{i theta})| <= sup |v''| <= l2, so samples at spacing 2 pi / N
  // miss at most l2 pi / N
  double sampled = 0;
  int n = std::max(opts.samples, 8);
  for (int k = 0; k < n; ++k) {
    double t = 2 * std::numbers::pi * k / n;
    sampled = std::max(sampled, std::abs(horner(c1, std::polar(1.0, t))));
  }
  double bound = std::min(sampled + l2 * std::numbers::pi / n, l1) * (1 + 1e-9);
  out.derivative_bound = bound;
  if (!(bound < 1)) {
    throw Error(ErrorCode::ShiftTooLarge, "sup |v'| may reach " + std::to_string(bound) + " on the closed disc");
  }
  return out;
}

std::string to_string(ProjectionFlavor flavor) { return flavor == ProjectionFlavor::CStar ? "CStar" : "C"; }

std::string to_string(ProjectionPattern pattern) {
  switch (pattern) {
    case ProjectionPattern::DistinctThetas:
      return "distinct_thetas";
    case ProjectionPattern::GenericD:
      return "generic_d";
    case ProjectionPattern::ZeroInfinitySplit:
      return "zero_infinity_split";
  }
  return "unknown";
}

}  // namespace okaforge
