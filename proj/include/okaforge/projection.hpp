#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "okaforge/domains.hpp"
#include "okaforge/doublepoints.hpp"
#include "okaforge/verifiers.hpp"

namespace okaforge {

enum class ProjectionFlavor { CStar, C };

/// Which sufficient pattern the certificate checked.
enum class ProjectionPattern { DistinctThetas, GenericD, ZeroInfinitySplit };

/// Im(u_i conj u_j) for theta certificates, Im((d - b_i) conj(b_j - b_i))
/// for d certificates. Nonzero means the pair is separated.
struct PairWitness {
  std::size_t i;
  std::size_t j;
  Rational value;
};

/// Order of the relevant component at the mark b_i of boundary curve i.
struct EscapeWitness {
  std::size_t curve;
  GaussianRational point;
  int order;
};

struct ProjectionCertificate {
  ProjectionFlavor flavor = ProjectionFlavor::CStar;
  ProjectionPattern pattern = ProjectionPattern::DistinctThetas;
  /// u_i = (g (z - b_i))(b_i).
  std::vector<GaussianRational> theta;
  std::optional<GaussianRational> d;
  std::vector<PairWitness> pairs;
  std::vector<EscapeWitness> escape;
  Verdict verdict = Verdict::Pass;

  bool passed() const { return verdict == Verdict::Pass; }
  /// Pairs whose witness value is zero.
  std::vector<std::pair<std::size_t, std::size_t>> offending() const;
};

/// Pass iff every pair of directions arg u_i differs mod pi. Throws
/// InvalidParameter unless g has a simple pole at every b_i.
ProjectionCertificate theta_certificate(const FactoredRational& g, std::span<const GaussianRational> b);

/// The first component escapes through a pole at every b_i, and d lies
/// outside the closed disc of radius min_modulus and off every line b_i b_j.
ProjectionCertificate d_certificate(const RationalFunction& f, const GaussianRational& d,
                                    std::span<const GaussianRational> b, const Rational& min_modulus);

/// Two boundary marks where g has orders +1 and -1: one curve goes to 0,
/// the other to infinity.
ProjectionCertificate split_certificate(const FactoredRational& g, std::span<const GaussianRational> b);

struct Remediation {
  FactoredRational g;
  std::optional<GaussianRational> d;
  ProjectionCertificate certificate;
  /// Candidates rejected before the accepted one.
  std::vector<GaussianRational> rejected;
};

/// Multiplies g by (z - d) for a generic d far from the disc, with the
/// minimum modulus doubling from 8, until the theta test passes. A single
/// mark passes without d. Throws PreconditionViolated if the input already
/// passes and SearchExhausted when the budget runs out.
Remediation remediate_thetas(const FactoredRational& g, std::span<const GaussianRational> b,
                             std::span<const GaussianRational> avoid, std::uint64_t seed = 0, int budget = 32);

struct ClearanceViolation {
  std::size_t pair;
  /// 0 for x, 1 for y.
  int coordinate;
  /// Hole index (1-based), 0 for the unit circle.
  std::size_t circle;
  double distance;
};

struct ClearanceReport {
  Verdict verdict = Verdict::Pass;
  std::vector<ClearanceViolation> violations;
  bool passed() const { return verdict == Verdict::Pass; }
};

/// Fails when a double point coordinate lies within its certification
/// radius of a boundary circle. Throws AmbiguousBoundary when rounding
/// prevents a decision and InvalidParameter unless the report is Finite.
ClearanceReport boundary_clearance(const DoublePointReport& report, const PuncturedCircularDomain& D);

struct ReshapeMap {
  Polynomial v;
  GaussianRational x;
  GaussianRational x_j;
  /// Upper bound for sup |v'| on the closed unit disc.
  double derivative_bound = 0;
};

struct ReshapeOptions {
  int samples = 512;
};

/// v = ((x - x_j) / w(x_j)) w with w = prod (z - puncture), so z + v(z) moves
/// x_j to x. Throws InvalidParameter when x_j is a puncture and ShiftTooLarge
/// unless sup |v'| < 1 on the closed disc.
ReshapeMap build_reshape(std::span<const GaussianRational> punctures, const GaussianRational& x,
                         const GaussianRational& x_j, const ReshapeOptions& opts = {});

std::string to_string(ProjectionFlavor flavor);
std::string to_string(ProjectionPattern pattern);

}  // namespace okaforge
