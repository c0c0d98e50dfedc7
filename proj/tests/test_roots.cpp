#include <random>

#include "doctest.h"
#include "okaforge/error.hpp"
#include "okaforge/numeric/roots.hpp"
#include "support.hpp"

using namespace okaforge;
using namespace okaforge::numeric;
using testing_support::z;
using testing_support::zvar;

namespace {

bool same_report(const std::vector<CertifiedRoot>& a, const std::vector<CertifiedRoot>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(a[k].center.re == b[k].center.re) || !(a[k].center.im == b[k].center.im)) return false;
    if (!(a[k].radius == b[k].radius) || a[k].multiplicity != b[k].multiplicity) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("z^2 + 1 has roots +-i with tiny discs") {
  RootOptions opts;
  opts.precision = 128;
  opts.target_radius = 1e-20;
  auto roots = find_roots(Polynomial({z(1), z(0), z(1)}), opts);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].center.im.to_double() == doctest::Approx(-1.0));
  CHECK(roots[1].center.im.to_double() == doctest::Approx(1.0));
  for (const auto& r : roots) {
    CHECK(r.radius.to_double() < 1e-20);
    CHECK(r.multiplicity == 1);
  }
}

TEST_CASE("(z - 1)^3 is one root of multiplicity 3") {
  auto roots = find_roots(Polynomial::linear(z(1)).pow(3));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].multiplicity == 3);
  CHECK(abs(roots[0].center - BigComplex(z(1), 64)).to_double() < 1e-15);
}

TEST_CASE("pi-bearing quadratic z^2 + 2 pi i z - 1") {
  // x stands for pi
  std::vector<Polynomial> rows = {Polynomial::constant(z(-1)), Polynomial({z(0), z(0, 2)}), Polynomial::constant(z(1))};
  auto roots = find_roots_pi(BivariatePolynomial(rows));
  REQUIRE(roots.size() == 2);
  // oracle: i(-pi +- sqrt(pi^2 - 1)) at 256 bits
  BigFloat pi = BigFloat::pi(256);
  BigFloat s = sqrt(pi * pi - BigFloat(1.0, 256));
  std::vector<double> expected = {(-pi - s).to_double(), (-pi + s).to_double()};
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(std::abs(roots[k].center.re.to_double()) < 1e-15);
    CHECK(std::abs(roots[k].center.im.to_double() - expected[k]) < 1e-15);
  }
}

TEST_CASE("filter_points") {
  BigComplex near_one(BigFloat(1.0, 256) + BigFloat::pow2(-100, 256), BigFloat(256));
  CertifiedRoot r1{near_one, BigFloat::pow2(-100, 256), 1};
  std::vector<GaussianRational> one = {z(1)};
  auto res = filter_points(std::span(&r1, 1), one, 1e-10);
  CHECK(res.matched.size() == 1);
  CHECK(res.kept.empty());

  CertifiedRoot ri{BigComplex(z(0, 1), 64), BigFloat(1e-30, 64), 1};
  std::vector<GaussianRational> zero = {z(0)};
  auto res2 = filter_points(std::span(&ri, 1), zero, 1e-10);
  CHECK(res2.kept.size() == 1);

  CertifiedRoot fuzzy{BigComplex(GaussianRational::from_fractions(1, 100), 64), BigFloat(1e-2, 64), 1};
  CHECK_THROWS_AS(filter_points(std::span(&fuzzy, 1), zero, 1e-2), Error);
}

TEST_CASE("constant input is rejected") { CHECK_THROWS_AS(find_roots(Polynomial::constant(z(3))), Error); }

TEST_CASE("random polynomials: multiplicities sum to degree, residuals bounded, runs repeat bit for bit") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial p = Polynomial::constant(testing_support::small_gaussian(rng) + z(6));
    int factors = static_cast<int>(testing_support::draw(rng, 1, 4));
    for (int k = 0; k < factors; ++k) {
      p *= testing_support::random_monic(rng, static_cast<int>(testing_support::draw(rng, 1, 3)))
               .pow(static_cast<unsigned>(testing_support::draw(rng, 1, 2)));
    }
    auto roots = find_roots(p);
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    CHECK(total == p.degree());

    // |p(center)| <= degree * (coefficient magnitude bound) * radius, per simple root
    BivariatePolynomial as_biv = BivariatePolynomial::in_y(p);
    for (const auto& r : roots) {
      if (r.multiplicity != 1) continue;
      BigFloat bound = lipschitz_bound(as_biv, BigFloat(1.0, 64), abs(r.center) + r.radius) * r.radius;
      CHECK(abs(evaluate(p, r.center)) <= bound * BigFloat(static_cast<double>(p.degree()), 64));
    }

    // pairwise disjoint discs
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        CHECK(abs(roots[i].center - roots[j].center) > roots[i].radius + roots[j].radius);
      }
    }
    CHECK(same_report(roots, find_roots(p)));
  }
}

TEST_CASE("rationalize recovers small fractions") {
  BigFloat x(Rational(355, 113), 128);
  CHECK(rationalize(x, Integer(1000)) == Rational(355, 113));
  CHECK(rationalize(BigFloat(-0.75, 64), Integer(100)) == Rational(-3, 4));
  CHECK(rationalize(BigFloat(4.0, 64), Integer(100)) == Rational(4));
}
