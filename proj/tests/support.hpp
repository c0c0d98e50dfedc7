#pragma once

#include <cstdint>
#include <random>

#include "okaforge/exact/bivariate.hpp"
#include "okaforge/exact/polynomial.hpp"

namespace testing_support {

using okaforge::GaussianRational;
using okaforge::Polynomial;

inline GaussianRational z(long re, long im = 0) { return {okaforge::Rational(re), okaforge::Rational(im)}; }

inline GaussianRational frac(long num, long den, long inum = 0, long iden = 1) {
  return GaussianRational::from_fractions(num, den, inum, iden);
}

inline Polynomial zvar() { return Polynomial({GaussianRational(0), GaussianRational(1)}); }

inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline GaussianRational small_gaussian(std::mt19937_64& rng, long bound = 5) {
  return {okaforge::Rational(draw(rng, -bound, bound)), okaforge::Rational(draw(rng, -bound, bound))};
}

inline Polynomial random_monic(std::mt19937_64& rng, int degree, long bound = 5) {
  std::vector<GaussianRational> c;
  for (int k = 0; k < degree; ++k) c.push_back(small_gaussian(rng, bound));
  c.push_back(GaussianRational(1));
  return Polynomial(c);
}

}  // namespace testing_support
