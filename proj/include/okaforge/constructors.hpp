#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "okaforge/domains.hpp"
#include "okaforge/map_pair.hpp"
#include "okaforge/projection.hpp"
#include "okaforge/verifiers.hpp"

namespace okaforge {

/// ((z - c)^(n+1) / prod (z - a_j), exp(z)). Throws InvalidParameter when c is
/// a puncture or X has no punctures.
MapPair build_null_immersion(const PuncturedPlane& X, const GaussianRational& c);

struct PerturbationAttempt {
  /// The numerator p tried; q and g never change.
  Polynomial p;
  std::string perturbation;
  std::string failed_check;
};

struct PerturbationLog {
  std::uint64_t seed = 0;
  std::vector<PerturbationAttempt> attempts;
  /// Numerator of the accepted first component.
  Polynomial accepted;
  /// Regular value used for the fiber test; unset when r = n.
  std::optional<GaussianRational> regular_value;
  MapPair final;
};

struct NonnullOptions {
  std::uint64_t seed = 0;
  int budget = 64;
};

/// (p/q, g) with g = prod over nonzero windings and q = prod over zero ones;
/// (z, g) when every winding is nonzero. Throws WrongBranch for the null
/// class, ShapeError on a length mismatch, SearchExhausted past the budget.
std::pair<MapPair, PerturbationLog> build_nonnull_immersion(const PuncturedPlane& X, const WindingClass& w,
                                                            const NonnullOptions& opts = {});

/// Rebuilds the map from the accepted numerator of a log.
MapPair replay(const PuncturedPlane& X, const WindingClass& w, const PerturbationLog& log);

struct NotCovered {
  std::string reason;
};

struct PlaneEmbedding {
  int case_number = 0;
  MapPair map;
  /// Puncture indices in the order the case formula reads them.
  std::vector<std::size_t> order;
};

std::variant<PlaneEmbedding, NotCovered> build_embedding_plane(const PuncturedPlane& X, const WindingClass& w);

struct WoldHypotheses {
  Certificate properness;
  Certificate immersion;
  Certificate injective;
  ClearanceReport clearance;
  /// Condition (3) is the projection certificate itself.
  bool holds() const { return properness.passed() && immersion.passed() && injective.passed() && clearance.passed(); }
};

struct CircularEmbedding {
  int case_number = 0;
  ReductionResult reduction;
  MapPair map;
  ProjectionCertificate projection;
  /// Set when the first theta test failed and a zero at d was added.
  std::optional<Remediation> remediation;
  WoldHypotheses wold;
};

/// Throws InvalidParameter if D is invalid or has no punctures.
std::variant<CircularEmbedding, NotCovered> build_embedding_circular(const PuncturedCircularDomain& D,
                                                                     const WindingClass& w, std::uint64_t seed = 0);

/// A point with |d| >= min_modulus off every real line through two of the
/// given points. Deterministic in the seed.
GaussianRational pick_generic_d(std::span<const GaussianRational> points, const Rational& min_modulus,
                                std::uint64_t seed = 0);

/// True when d lies on the real line through b_i and b_j.
bool collinear(const GaussianRational& d, const GaussianRational& bi, const GaussianRational& bj);

}  // namespace okaforge
