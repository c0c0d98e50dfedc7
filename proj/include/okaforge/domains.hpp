#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "okaforge/map_pair.hpp"

namespace okaforge {

/// C minus finitely many points.
struct PuncturedPlane {
  std::vector<GaussianRational> punctures;
  friend bool operator==(const PuncturedPlane&, const PuncturedPlane&) = default;
};

/// The closed disc |z - center| <= radius removed from the unit disc.
struct Hole {
  GaussianRational center;
  Rational radius;
  friend bool operator==(const Hole&, const Hole&) = default;
};

/// Unit disc minus closed holes and points.
struct PuncturedCircularDomain {
  std::vector<Hole> holes;
  std::vector<GaussianRational> punctures;
  friend bool operator==(const PuncturedCircularDomain&, const PuncturedCircularDomain&) = default;
};

struct WindingClass {
  std::vector<int> puncture_windings;
  std::vector<int> hole_windings;
  bool is_null() const;
  friend bool operator==(const WindingClass&, const WindingClass&) = default;
};

struct Violation {
  std::string constraint;
  std::vector<std::size_t> indices;
  std::string detail;
};

std::vector<Violation> validate(const PuncturedPlane& X);
std::vector<Violation> validate(const PuncturedCircularDomain& D);

/// prod (z - a_j).
Polynomial puncture_polynomial(std::span<const GaussianRational> points);

/// True when z lies in the open unit disc, outside every closed hole and off
/// the punctures. Exact.
bool contains(const PuncturedCircularDomain& D, const GaussianRational& z);
bool contains(const PuncturedPlane& X, const GaussianRational& z);

/// Windings k_j read off the orders of the second component. Throws
/// InvalidSecondComponent if it has a zero or pole in X off the punctures.
WindingClass classify_map(const MapPair& map, const PuncturedPlane& X);
/// Same for a circular domain; the winding about hole i is the total order of
/// the second component inside the closed hole disc.
WindingClass classify_map(const MapPair& map, const PuncturedCircularDomain& D);

enum class PointRole { Puncture, BoundaryMark, HoleCenter };

struct MarkedPoint {
  GaussianRational point;
  PointRole role;
  /// j for a_j, i for b_i (b_0 = i), i for c_i (1-based).
  std::size_t index;
};

struct ReductionResult {
  PuncturedPlane plane;
  WindingClass windings;
  std::vector<MarkedPoint> marked_points;
};

/// The auxiliary plane Y = C minus {a_1..a_n, b_0..b_m, c_1..c_m} with
/// b_0 = i and b_i = c_i + r_i i, carrying windings (k_j; -1, ..., -1; s_i + 1).
/// Throws ShapeError when the winding vectors do not fit the domain.
ReductionResult reduce_to_plane(const PuncturedCircularDomain& D, const WindingClass& w);

std::string to_string(PointRole role);

}  // namespace okaforge
