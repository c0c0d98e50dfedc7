#include <random>

#include "doctest.h"
#include "okaforge/constructors.hpp"
#include "okaforge/error.hpp"
#include "okaforge/projection.hpp"
#include "support.hpp"

using namespace okaforge;
using testing_support::frac;
using testing_support::z;

namespace {

FactoredRational simple_poles(const std::vector<GaussianRational>& b) {
  std::vector<FactoredRational::Factor> fs;
  for (const auto& p : b) fs.push_back({p, -1});
  return FactoredRational(1, fs);
}

// direct recomputation: u_i = 1 / prod_{j != i} (b_i - b_j) times the extra factors
GaussianRational direct_u(const std::vector<GaussianRational>& b, std::size_t i,
                          const std::vector<GaussianRational>& zeros = {}) {
  GaussianRational u(1);
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (j != i) u /= b[i] - b[j];
  }
  for (const auto& d : zeros) u *= b[i] - d;
  return u;
}

numeric::BigComplex big(const GaussianRational& p) { return numeric::BigComplex(p, 128); }

DoublePointReport one_pair(const GaussianRational& x, const GaussianRational& y) {
  DoublePointReport r;
  r.pairs.push_back({big(x), big(y), numeric::BigFloat(128), numeric::BigFloat(1e-20, 128), std::nullopt});
  return r;
}

}  // namespace

TEST_CASE("theta certificate examples") {
  std::vector<GaussianRational> b1 = {z(0, 1), z(0, 2)};
  ProjectionCertificate c1 = theta_certificate(simple_poles(b1), b1);
  CHECK(c1.theta == std::vector<GaussianRational>{z(0, 1), z(0, -1)});
  CHECK_FALSE(c1.passed());
  CHECK(c1.offending() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});

  std::vector<GaussianRational> b2 = {z(0, 1), z(1, 1)};
  ProjectionCertificate c2 = theta_certificate(simple_poles(b2), b2);
  CHECK(c2.theta == std::vector<GaussianRational>{z(-1), z(1)});
  CHECK_FALSE(c2.passed());

  // a zero at 10 + i: u_i pick up (b_i - d)
  GaussianRational d = z(10, 1);
  FactoredRational g1 = simple_poles(b1).times(FactoredRational(1, {{d, 1}}));
  ProjectionCertificate r1 = theta_certificate(g1, b1);
  CHECK(r1.theta[0] == direct_u(b1, 0, {d}));
  CHECK(r1.theta[1] == direct_u(b1, 1, {d}));
  CHECK(r1.passed());
  // 10 + i lies on the line Im z = 1 through i and 1 + i, so this pair stays tied
  FactoredRational g2 = simple_poles(b2).times(FactoredRational(1, {{d, 1}}));
  ProjectionCertificate r2 = theta_certificate(g2, b2);
  CHECK(r2.theta == std::vector<GaussianRational>{z(10), z(-9)});
  CHECK_FALSE(r2.passed());
  CHECK(collinear(d, b2[0], b2[1]));

  CHECK_THROWS_AS(theta_certificate(FactoredRational(1, {{z(0, 1), -2}}), std::vector<GaussianRational>{z(0, 1)}),
                  Error);
  CHECK_THROWS_AS(theta_certificate(FactoredRational(1, {{z(0, 1), -1}}), b1), Error);
}

TEST_CASE("theta verdict is invariant under rescaling g") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<GaussianRational> b;
    int m = static_cast<int>(testing_support::draw(rng, 2, 4));
    while (static_cast<int>(b.size()) < m) {
      GaussianRational p = testing_support::small_gaussian(rng, 3);
      if (std::find(b.begin(), b.end(), p) == b.end()) b.push_back(p);
    }
    FactoredRational g = simple_poles(b);
    if (trial % 3 == 0) g = g.times(FactoredRational(1, {{z(5, 2), 1}}));
    GaussianRational scale = testing_support::small_gaussian(rng, 4);
    if (scale.is_zero()) scale = z(0, 3);
    CHECK(theta_certificate(g, b).passed() == theta_certificate(g.scaled(scale), b).passed());
  }
}

TEST_CASE("remediate_thetas") {
  std::vector<GaussianRational> b1 = {z(0, 1), z(0, 2)};
  Remediation r = remediate_thetas(simple_poles(b1), b1, b1);
  REQUIRE(r.d.has_value());
  CHECK(r.certificate.passed());
  CHECK(theta_certificate(r.g, b1).passed());
  CHECK(r.g.order_at(*r.d) == 1);
  CHECK(r.d->norm() >= 64);

  // two bare simple poles always tie (u_2 = -u_1); a zero at i separates 0 and 1
  std::vector<GaussianRational> ok = {z(0), z(1)};
  FactoredRational passing = simple_poles(ok).times(FactoredRational(1, {{z(0, 1), 1}}));
  REQUIRE(theta_certificate(passing, ok).passed());
  CHECK_THROWS_AS(remediate_thetas(passing, ok, ok), Error);

  std::vector<GaussianRational> single = {z(0, 1)};
  Remediation s = remediate_thetas(simple_poles(single), single, single);
  CHECK_FALSE(s.d.has_value());
  CHECK(s.certificate.passed());
}

TEST_CASE("remediate_thetas output always re-certifies") {
  // symmetric configurations tie directions often; every output must pass
  std::mt19937_64 rng(77);
  int remediated = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<GaussianRational> b;
    int m = static_cast<int>(testing_support::draw(rng, 2, 4));
    while (static_cast<int>(b.size()) < m) {
      GaussianRational p = z(0, testing_support::draw(rng, -4, 4));
      if (trial % 2 == 1) p = z(testing_support::draw(rng, -4, 4), 1);
      if (std::find(b.begin(), b.end(), p) == b.end()) b.push_back(p);
    }
    FactoredRational g = simple_poles(b);
    if (theta_certificate(g, b).passed()) continue;
    Remediation r = remediate_thetas(g, b, b, static_cast<std::uint64_t>(trial));
    CHECK(theta_certificate(r.g, b).passed());
    ++remediated;
  }
  CHECK(remediated >= 10);
}

TEST_CASE("boundary_clearance") {
  PuncturedCircularDomain D{{{frac(1, 2), Rational(1, 4)}}, {frac(-1, 2)}};
  CHECK(boundary_clearance(DoublePointReport{}, D).passed());
  CHECK(boundary_clearance(one_pair(frac(-1, 2, 1, 10), frac(0, 1, -1, 2)), D).passed());

  ClearanceReport on_circle = boundary_clearance(one_pair(z(1), frac(-1, 5)), D);
  CHECK_FALSE(on_circle.passed());
  REQUIRE(on_circle.violations.size() == 1);
  CHECK(on_circle.violations[0].circle == 0);
  CHECK(on_circle.violations[0].coordinate == 0);

  ClearanceReport on_hole = boundary_clearance(one_pair(frac(-1, 5), frac(3, 4)), D);
  REQUIRE(on_hole.violations.size() == 1);
  CHECK(on_hole.violations[0].circle == 1);
  CHECK(on_hole.violations[0].coordinate == 1);

  DoublePointReport infinite;
  infinite.finiteness = Finiteness::InfiniteCommonComponent;
  CHECK_THROWS_AS(boundary_clearance(infinite, D), Error);
}

TEST_CASE("build_reshape") {
  std::vector<GaussianRational> zero = {z(0)};
  ReshapeMap r = build_reshape(zero, z(1), frac(99, 100));
  CHECK(r.v == Polynomial({z(0), frac(1, 99)}));
  CHECK(r.derivative_bound == doctest::Approx(1.0 / 99).epsilon(1e-6));
  CHECK(frac(99, 100) + r.v(frac(99, 100)) == z(1));

  CHECK(build_reshape(zero, z(1), z(1)).v.is_zero());
  std::vector<GaussianRational> two = {z(0), frac(1, 2)};
  CHECK_THROWS_AS(build_reshape(two, z(1), frac(1, 2)), Error);
  CHECK_THROWS_AS(build_reshape(zero, z(1), frac(1, 10)), Error);
}

TEST_CASE("build_reshape: rho(x_j) = x and v vanishes at every puncture") {
  std::mt19937_64 rng(31);
  int built = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<GaussianRational> punct;
    int n = static_cast<int>(testing_support::draw(rng, 1, 4));
    for (int k = 0; k < n; ++k) punct.push_back(testing_support::frac(testing_support::draw(rng, -3, 3), 4,
                                                                    testing_support::draw(rng, -3, 3), 4));
    GaussianRational x = z(0, 1);
    GaussianRational xj = frac(0, 1, 999, 1000) + frac(testing_support::draw(rng, -5, 5), 10000);
    try {
      ReshapeMap r = build_reshape(punct, x, xj);
      CHECK(xj + r.v(xj) == x);
      for (const auto& a : punct) CHECK(r.v(a).is_zero());
      CHECK(r.derivative_bound < 1);
      ++built;
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::ShiftTooLarge || e.code() == ErrorCode::InvalidParameter));
    }
  }
  CHECK(built >= 20);
}
