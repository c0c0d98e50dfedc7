#include "okaforge/domains.hpp"

#include <algorithm>

#include "okaforge/error.hpp"

namespace okaforge {

namespace {

Rational square(const Rational& q) { return q * q; }

std::string index_list(std::size_t i, std::size_t j) { return std::to_string(i) + "," + std::to_string(j); }

bool in_closed_hole(const Hole& h, const GaussianRational& z) { return (z - h.center).norm() <= square(h.radius); }

void check_distinct(const std::vector<GaussianRational>& pts, std::vector<Violation>& out) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) {
        out.push_back({"distinct_punctures", {i, j}, "punctures " + index_list(i, j) + " coincide"});
      }
    }
  }
}

}  // namespace

bool WindingClass::is_null() const {
  auto zero = [](int k) { return k == 0; };
  return std::all_of(puncture_windings.begin(), puncture_windings.end(), zero) &&
         std::all_of(hole_windings.begin(), hole_windings.end(), zero);
}

std::vector<Violation> validate(const PuncturedPlane& X) {
  std::vector<Violation> out;
  check_distinct(X.punctures, out);
  return out;
}

std::vector<Violation> validate(const PuncturedCircularDomain& D) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < D.holes.size(); ++i) {
    const Hole& h = D.holes[i];
    if (sgn(h.radius) <= 0) {
      out.push_back({"positive_radius", {i}, "hole " + std::to_string(i) + " has radius <= 0"});
      continue;
    }
    // r_i < 1 - |c_i|, squared after checking 1 - r_i > 0
    Rational slack = 1 - h.radius;
    if (sgn(slack) <= 0 || h.center.norm() >= square(slack)) {
      out.push_back({"hole_inside_disc", {i}, "hole " + std::to_string(i) + " violates r_i < 1 - |c_i|"});
    }
    for (std::size_t j = i + 1; j < D.holes.size(); ++j) {
      const Hole& o = D.holes[j];
      if (sgn(o.radius) <= 0) continue;
      if (square(h.radius + o.radius) >= (h.center - o.center).norm()) {
        out.push_back({"holes_disjoint", {i, j}, "holes " + index_list(i, j) + " violate r_i + r_j < |c_i - c_j|"});
      }
    }
  }
  for (std::size_t j = 0; j < D.punctures.size(); ++j) {
    const auto& a = D.punctures[j];
    if (a.norm() >= 1) {
      out.push_back({"puncture_inside_disc", {j}, "puncture " + std::to_string(j) + " is not in the open unit disc"});
    }
    for (std::size_t i = 0; i < D.holes.size(); ++i) {
      if (in_closed_hole(D.holes[i], a)) {
        out.push_back({"puncture_outside_hole", {j, i},
                       "puncture " + std::to_string(j) + " lies in closed hole " + std::to_string(i)});
      }
    }
  }
  check_distinct(D.punctures, out);
  return out;
}

Polynomial puncture_polynomial(std::span<const GaussianRational> points) { return Polynomial::from_roots(points); }

bool contains(const PuncturedPlane& X, const GaussianRational& z) {
  return std::find(X.punctures.begin(), X.punctures.end(), z) == X.punctures.end();
}

bool contains(const PuncturedCircularDomain& D, const GaussianRational& z) {
  if (z.norm() >= 1) return false;
  for (const auto& h : D.holes) {
    if (in_closed_hole(h, z)) return false;
  }
  return std::find(D.punctures.begin(), D.punctures.end(), z) == D.punctures.end();
}

WindingClass classify_map(const MapPair& map, const PuncturedPlane& X) {
  WindingClass w;
  w.puncture_windings.assign(X.punctures.size(), 0);
  if (map.has_exp_second()) return w;
  const FactoredRational& g = map.factored();
  for (const auto& f : g.factors()) {
    auto it = std::find(X.punctures.begin(), X.punctures.end(), f.root);
    if (it == X.punctures.end()) {
      throw Error(ErrorCode::InvalidSecondComponent,
                  "second component has a " + std::string(f.multiplicity > 0 ? "zero" : "pole") + " at " +
                      f.root.to_string() + ", which lies in the domain");
    }
    w.puncture_windings[static_cast<std::size_t>(it - X.punctures.begin())] = f.multiplicity;
  }
  return w;
}

WindingClass classify_map(const MapPair& map, const PuncturedCircularDomain& D) {
  WindingClass w;
  w.puncture_windings.assign(D.punctures.size(), 0);
  w.hole_windings.assign(D.holes.size(), 0);
  if (map.has_exp_second()) return w;
  for (const auto& f : map.factored().factors()) {
    auto it = std::find(D.punctures.begin(), D.punctures.end(), f.root);
    if (it != D.punctures.end()) {
      w.puncture_windings[static_cast<std::size_t>(it - D.punctures.begin())] = f.multiplicity;
      continue;
    }
    bool placed = false;
    for (std::size_t i = 0; i < D.holes.size(); ++i) {
      if (in_closed_hole(D.holes[i], f.root)) {
        w.hole_windings[i] += f.multiplicity;
        placed = true;
        break;
      }
    }
    if (placed || f.root.norm() >= 1) continue;
    throw Error(ErrorCode::InvalidSecondComponent,
                "second component has a " + std::string(f.multiplicity > 0 ? "zero" : "pole") + " at " +
                    f.root.to_string() + ", which lies in the domain");
  }
  return w;
}

ReductionResult reduce_to_plane(const PuncturedCircularDomain& D, const WindingClass& w) {
  if (w.puncture_windings.size() != D.punctures.size() || w.hole_windings.size() != D.holes.size()) {
    throw Error(ErrorCode::ShapeError, "winding class has " + std::to_string(w.puncture_windings.size()) + "+" +
                                           std::to_string(w.hole_windings.size()) + " entries, domain has " +
                                           std::to_string(D.punctures.size()) + "+" +
                                           std::to_string(D.holes.size()));
  }
  ReductionResult r;
  for (std::size_t j = 0; j < D.punctures.size(); ++j) {
    r.plane.punctures.push_back(D.punctures[j]);
    r.windings.puncture_windings.push_back(w.puncture_windings[j]);
    r.marked_points.push_back({D.punctures[j], PointRole::Puncture, j + 1});
  }
  r.plane.punctures.push_back(GaussianRational::i());
  r.windings.puncture_windings.push_back(-1);
  r.marked_points.push_back({GaussianRational::i(), PointRole::BoundaryMark, 0});
  for (std::size_t i = 0; i < D.holes.size(); ++i) {
    GaussianRational b = D.holes[i].center + GaussianRational(Rational(0), D.holes[i].radius);
    r.plane.punctures.push_back(b);
    r.windings.puncture_windings.push_back(-1);
    r.marked_points.push_back({b, PointRole::BoundaryMark, i + 1});
  }
  for (std::size_t i = 0; i < D.holes.size(); ++i) {
    r.plane.punctures.push_back(D.holes[i].center);
    r.windings.puncture_windings.push_back(w.hole_windings[i] + 1);
    r.marked_points.push_back({D.holes[i].center, PointRole::HoleCenter, i + 1});
  }
  return r;
}

std::string to_string(PointRole role) {
  switch (role) {
    case PointRole::Puncture:
      return "puncture";
    case PointRole::BoundaryMark:
      return "boundary_mark";
    case PointRole::HoleCenter:
      return "hole_center";
  }
  return "unknown";
}

}  // namespace okaforge
