#include <complex>
#include <random>

#include "doctest.h"
#include "okaforge/error.hpp"
#include "okaforge/exact/bivariate.hpp"
#include "okaforge/exact/rational_function.hpp"
#include "okaforge/numeric/roots.hpp"
#include "support.hpp"

using namespace okaforge;
using testing_support::frac;
using testing_support::z;
using testing_support::zvar;

namespace {

const GaussianRational I = GaussianRational::i();

BivariatePolynomial X() { return BivariatePolynomial::in_x(zvar()); }
BivariatePolynomial Y() { return BivariatePolynomial::in_y(zvar()); }
BivariatePolynomial C(long c) { return BivariatePolynomial::constant(GaussianRational(c)); }

}  // namespace

TEST_CASE("gaussian rationals parse and print") {
  CHECK(parse_gaussian("3/4-1/2i") == frac(3, 4, -1, 2));
  CHECK(parse_gaussian("-i") == -I);
  CHECK(parse_gaussian("1/2i") == frac(0, 1, 1, 2));
  CHECK(frac(6, 8).re() == Rational(3, 4));
  CHECK(frac(3, 4, -1, 2).to_string() == "3/4-1/2i");
  CHECK((z(1, 1) * z(1, -1)) == z(2));
  CHECK(z(0, 1).inverse() == -I);
  CHECK_THROWS_AS(z(1) / z(0), Error);
  CHECK_THROWS_AS(parse_gaussian("1/0"), Error);
}

TEST_CASE("poly_gcd on small cases") {
  Polynomial x = zvar();
  CHECK(poly_gcd(x * x - Polynomial::constant(1), x - Polynomial::constant(1)) == x - Polynomial::constant(1));
  CHECK(poly_gcd(x * x + Polynomial::constant(1), x * x + Polynomial::constant(2)) == Polynomial::constant(1));

  Polynomial a = Polynomial::linear(I).pow(2) * Polynomial::linear(z(-3));
  Polynomial b = Polynomial::linear(I) * Polynomial::linear(z(5));
  Polynomial g = poly_gcd(a, b);
  CHECK(g == Polynomial::linear(I));
  // independent check: the gcd divides both with zero remainder
  CHECK(divmod(a, g).second.is_zero());
  CHECK(divmod(b, g).second.is_zero());
  CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), Error);
}

TEST_CASE("poly_gcd property: divides both and scales with a common factor") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial a = testing_support::random_monic(rng, testing_support::draw(rng, 0, 6));
    Polynomial b = testing_support::random_monic(rng, testing_support::draw(rng, 0, 6));
    Polynomial c = testing_support::random_monic(rng, testing_support::draw(rng, 1, 3));
    Polynomial g = poly_gcd(a, b);
    CHECK(divmod(a, g).second.is_zero());
    CHECK(divmod(b, g).second.is_zero());
    CHECK(poly_gcd(a * c, b * c) == (c * g).monic());
  }
}

TEST_CASE("squarefree decomposition and multiplicities") {
  Polynomial p = Polynomial::linear(z(1)).pow(3) * Polynomial::linear(I) * Polynomial::linear(z(2)).pow(2);
  auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == Polynomial::linear(I));
  CHECK(parts[1] == Polynomial::linear(z(2)));
  CHECK(parts[2] == Polynomial::linear(z(1)));
  CHECK(multiplicity_at(p, z(1)) == 3);
  CHECK(multiplicity_at(p, z(7)) == 0);
  Polynomial punct = Polynomial::linear(z(1)) * Polynomial::linear(z(5));
  CHECK(strip_common_roots(p, punct) == Polynomial::linear(I) * Polynomial::linear(z(2)).pow(2));
}

TEST_CASE("rational functions reduce and compose") {
  Polynomial x = zvar();
  RationalFunction f(x * x - Polynomial::constant(1), (x - Polynomial::constant(1)) * Polynomial::constant(2));
  CHECK(f.num() == (x + Polynomial::constant(1)) * frac(1, 2));
  CHECK(f.den() == Polynomial::constant(1));
  RationalFunction h(x * x + Polynomial::constant(1), x);  // z + 1/z
  CHECK(h.order_at(z(0)) == -1);
  CHECK(h.order_at_infinity() == -1);
  RationalFunction inv(Polynomial::constant(1), x);
  CHECK(h.compose(inv) == h);
  CHECK(h(z(2)) == frac(5, 2));
  CHECK_THROWS_AS(h(z(0)), Error);
}

TEST_CASE("factored rational round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<FactoredRational::Factor> fs;
    int count = static_cast<int>(testing_support::draw(rng, 1, 4));
    for (int k = 0; k < count; ++k) {
      long m = testing_support::draw(rng, -3, 3);
      if (m == 0) m = 1;
      fs.push_back({GaussianRational(z(k * 2 - 3, testing_support::draw(rng, -2, 2))), static_cast<int>(m)});
    }
    FactoredRational g(testing_support::small_gaussian(rng) + z(7), fs);
    FactoredRational back;
    REQUIRE(numeric::try_factor(g.expand(), back));
    CHECK_MESSAGE(back == g, back.to_string() << " vs " << g.to_string());
    for (const auto& f : g.factors()) CHECK(g.expand().order_at(f.root) == f.multiplicity);
    CHECK(g.expand().order_at_infinity() == g.order_at_infinity());
  }
}

TEST_CASE("resultant examples") {
  // det [[-1, x], [1, x]] = -2x
  CHECK(resultant_in_y(X() - Y(), X() + Y()) == Polynomial({z(0), z(-2)}));
  CHECK(resultant_in_y(X() - Y(), X() - Y()).is_zero());
  Polynomial r = resultant_in_y(X() * Y() - C(1), Y() - X() - C(2));
  // Sylvester 2x2: det [[x, -1], [1, -x-2]] = -x^2 - 2x + 1
  CHECK(r == Polynomial({z(1), z(-2), z(-1)}));
  CHECK(r.monic() == Polynomial({z(-1), z(2), z(1)}));
  CHECK_THROWS_AS(resultant_in_y(X(), Y()), Error);
  CHECK_THROWS_AS(resultant_in_y(BivariatePolynomial(), Y()), Error);
}

TEST_CASE("resultant vanishing matches shared roots of the specializations") {
  // Brute-force oracle: numeric roots of F(x0, .) and G(x0, .) compared pairwise.
  std::mt19937_64 rng(5);
  auto random_biv = [&](int ydeg) {
    std::vector<Polynomial> rows;
    for (int j = 0; j <= ydeg; ++j) {
      rows.push_back(Polynomial({testing_support::small_gaussian(rng, 3), testing_support::small_gaussian(rng, 3)}));
    }
    return BivariatePolynomial(rows);
  };
  int positives = 0;
  for (int trial = 0; trial < 40; ++trial) {
    // (y - u(x)) A and (y - v(x)) B share the root y = u(x0) where u(x0) = v(x0).
    GaussianRational u0 = testing_support::small_gaussian(rng, 4);
    GaussianRational x0 = testing_support::small_gaussian(rng, 3);
    BivariatePolynomial u = BivariatePolynomial::in_x(Polynomial({u0, z(1)}));
    // v(x) = 2x + u0 - x0 meets u(x) = x + u0 exactly at x0
    BivariatePolynomial v = BivariatePolynomial::in_x(Polynomial({u0 - x0, z(2)}));
    BivariatePolynomial F = (Y() - u) * random_biv(static_cast<int>(testing_support::draw(rng, 0, 2)));
    BivariatePolynomial G = (Y() - v) * random_biv(static_cast<int>(testing_support::draw(rng, 0, 2)));
    Polynomial R = resultant_in_y(F, G);
    if (R.is_zero()) continue;
    std::vector<GaussianRational> samples = {x0, x0 + z(1), testing_support::small_gaussian(rng, 3)};
    for (const auto& s : samples) {
      Polynomial f = F.at_x(s);
      Polynomial g = G.at_x(s);
      bool both_drop = F.leading_y()(s).is_zero() && G.leading_y()(s).is_zero();
      bool shared = false;
      if (f.is_zero() || g.is_zero()) {
        shared = true;
      } else if (!f.is_constant() && !g.is_constant()) {
        auto rf = numeric::find_roots(f);
        auto rg = numeric::find_roots(g);
        for (const auto& a : rf) {
          for (const auto& b : rg) {
            if (numeric::abs(a.center - b.center).to_double() < 1e-9) shared = true;
          }
        }
      }
      bool vanishes = R(s).is_zero();
      CHECK(vanishes == (shared || both_drop));
      if (vanishes) ++positives;
    }
  }
  CHECK(positives >= 20);
}

TEST_CASE("bivariate gcd") {
  BivariatePolynomial F = (X() + Y()) * (X() - Y());
  BivariatePolynomial G = (X() + Y()) * (X() * Y() - C(1));
  CHECK(bivariate_gcd(F, G) == (X() + Y()).normalized());
  CHECK(bivariate_gcd(X() - Y(), X() + Y()).is_constant());
  // content in x is part of the gcd too
  BivariatePolynomial H = (X() - C(3)) * (Y() * Y() + X());
  BivariatePolynomial K = (X() - C(3)) * (Y() - X());
  CHECK(bivariate_gcd(H, K) == (X() - C(3)).normalized());
}

TEST_CASE("bivariate exact division and squarefree split") {
  BivariatePolynomial A = Y() - X() * X();
  BivariatePolynomial B = X() * Y() + C(1);
  BivariatePolynomial P = A * A * A * B;
  auto parts = squarefree_decomposition_in_y(P);
  REQUIRE(parts.size() == 3);
  CHECK(bivariate_gcd(parts[0], B).y_degree() == 1);
  CHECK(parts[1].y_degree() <= 0);
  CHECK(bivariate_gcd(parts[2], A).y_degree() == 1);
  CHECK(exact_div(A * B, A) == B);
  CHECK_THROWS_AS(exact_div(A * B + C(1), A), Error);
}
