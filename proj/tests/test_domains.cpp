#include <random>

#include "doctest.h"
#include "okaforge/domains.hpp"
#include "okaforge/error.hpp"
#include "support.hpp"

using namespace okaforge;
using testing_support::frac;
using testing_support::z;

namespace {

MapPair with_second(FactoredRational g) { return {RationalFunction::identity(), std::move(g)}; }

bool has_constraint(const std::vector<Violation>& v, const std::string& name) {
  for (const auto& x : v) {
    if (x.constraint == name) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validate circular domains") {
  PuncturedCircularDomain ok{{{z(0), Rational(1, 2)}}, {frac(3, 4)}};
  CHECK(validate(ok).empty());

  PuncturedCircularDomain overlap{{{z(0), Rational(1, 2)}, {frac(3, 5), Rational(1, 5)}}, {}};
  auto v = validate(overlap);
  CHECK(has_constraint(v, "holes_disjoint"));

  PuncturedCircularDomain fits{{{frac(1, 2), Rational(2, 5)}}, {}};
  CHECK(validate(fits).empty());
  PuncturedCircularDomain too_big{{{frac(1, 2), Rational(3, 5)}}, {}};
  CHECK(has_constraint(validate(too_big), "hole_inside_disc"));

  PuncturedCircularDomain bad_points{{{z(0), Rational(1, 2)}}, {frac(1, 4), z(1), frac(-3, 4), frac(-3, 4)}};
  auto w = validate(bad_points);
  CHECK(has_constraint(w, "puncture_outside_hole"));
  CHECK(has_constraint(w, "puncture_inside_disc"));
  CHECK(has_constraint(w, "distinct_punctures"));

  // tangent holes are rejected: r_i + r_j = |c_i - c_j|
  PuncturedCircularDomain tangent{{{frac(-1, 2), Rational(1, 4)}, {z(0), Rational(1, 4)}}, {}};
  CHECK(has_constraint(validate(tangent), "holes_disjoint"));
}

TEST_CASE("classify_map reads multiplicities") {
  GaussianRational a1 = z(0), a2 = z(1), a3 = z(-1);
  PuncturedPlane X2{{a1, a2}};
  CHECK(classify_map(with_second(FactoredRational(1, {{a1, 2}, {a2, -1}})), X2).puncture_windings ==
        std::vector<int>{2, -1});

  PuncturedPlane X3{{a1, a2, a3}};
  MapPair exp_map{RationalFunction::identity(), ExpLinear{Scalar{}}};
  CHECK(classify_map(exp_map, X3).puncture_windings == std::vector<int>{0, 0, 0});
  CHECK(classify_map(with_second(FactoredRational(1, {{a1, 1}, {a2, -1}})), X3).puncture_windings ==
        std::vector<int>{1, -1, 0});

  CHECK_THROWS_AS(classify_map(with_second(FactoredRational(1, {{z(5), 1}})), X3), Error);
}

TEST_CASE("classify_map is invariant under factors away from the closure") {
  std::mt19937_64 rng(8);
  PuncturedCircularDomain D{{{frac(-1, 2), Rational(1, 5)}}, {frac(1, 2), frac(0, 1, 1, 3)}};
  for (int trial = 0; trial < 20; ++trial) {
    FactoredRational g(3, {{D.punctures[0], static_cast<int>(testing_support::draw(rng, -3, 3)) | 1},
                           {frac(-1, 2), static_cast<int>(testing_support::draw(rng, -2, 2))}});
    WindingClass base = classify_map(with_second(g), D);
    // multiply by a factor with zeros and poles outside the closed disc
    GaussianRational far = z(testing_support::draw(rng, 2, 9), testing_support::draw(rng, -9, 9));
    FactoredRational h = g.times(FactoredRational(z(2), {{far, static_cast<int>(testing_support::draw(rng, 1, 3))}}));
    CHECK(classify_map(with_second(h), D) == base);
    PuncturedPlane X{D.punctures};
    FactoredRational on_plane(1, {{D.punctures[0], 2}});
    CHECK(classify_map(with_second(on_plane), X) == classify_map(with_second(on_plane.scaled(z(0, 7))), X));
  }
}

TEST_CASE("reduce_to_plane examples") {
  GaussianRational a1 = frac(1, 3), a2 = frac(-1, 5);
  auto r = reduce_to_plane({{}, {a1, a2}}, {{3, 0}, {}});
  CHECK(r.plane.punctures == std::vector<GaussianRational>{a1, a2, GaussianRational::i()});
  CHECK(r.windings.puncture_windings == std::vector<int>{3, 0, -1});

  auto r2 = reduce_to_plane({{{z(0), Rational(1, 4)}}, {frac(1, 2)}}, {{5}, {0}});
  CHECK(r2.plane.punctures == std::vector<GaussianRational>{frac(1, 2), GaussianRational::i(), frac(0, 1, 1, 4), z(0)});
  CHECK(r2.windings.puncture_windings == std::vector<int>{5, -1, -1, 1});

  auto r3 = reduce_to_plane({{{frac(1, 2), Rational(1, 8)}}, {frac(-1, 2)}}, {{0}, {-1}});
  CHECK(r3.windings.puncture_windings == std::vector<int>{0, -1, -1, 0});
  CHECK(r3.marked_points[2].point == frac(1, 2, 1, 8));
  CHECK(r3.marked_points[2].role == PointRole::BoundaryMark);
  CHECK(r3.marked_points[3].role == PointRole::HoleCenter);

  CHECK_THROWS_AS(reduce_to_plane({{}, {a1}}, {{1, 2}, {}}), Error);
  CHECK_THROWS_AS(reduce_to_plane({{{z(0), Rational(1, 4)}}, {frac(1, 2)}}, {{1}, {}}), Error);
}
