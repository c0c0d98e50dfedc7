#pragma once

#include <optional>
#include <string>
#include <vector>

#include "okaforge/domains.hpp"
#include "okaforge/map_pair.hpp"

namespace okaforge {

enum class CertificateKind { Immersion, Properness, Winding, InjectiveByForm, Guard };
enum class Verdict { Pass, Fail, Warn };
enum class GuardOutcome { Pass, NotInjectivePair, Trivial, NotASymmetry, NoNullInjectionWithThisF };

struct Witness {
  std::string label;
  /// Set when the witness is an exact point of the domain.
  std::optional<GaussianRational> point;
  std::string detail;
};

struct Certificate {
  CertificateKind kind;
  Verdict verdict = Verdict::Pass;
  std::optional<GuardOutcome> guard;
  std::vector<Witness> witnesses;
  std::string note;

  bool passed() const { return verdict == Verdict::Pass; }
};

/// Pass iff the derivative numerators of the two components share no zero in
/// X. Exact: gcd of p'q - pq' and the numerator of g'/g, with every puncture
/// root divided out.
Certificate check_immersion(const MapPair& map, const PuncturedPlane& X);

/// Boundary escape as order conditions at each puncture and at infinity.
Certificate check_properness(const MapPair& map, const PuncturedPlane& X);

/// Properness of the restriction to the bordered surface: escape at each a_j
/// and each boundary mark b_i; no pole of the first component and no zero or
/// pole of the second elsewhere in the closure.
Certificate check_properness(const MapPair& map, const PuncturedCircularDomain& D);

/// Pass iff one component is affine or Moebius.
Certificate check_injective_by_form(const MapPair& map);

Certificate check_winding(const MapPair& map, const PuncturedPlane& X, const WindingClass& expected);
Certificate check_winding(const MapPair& map, const PuncturedCircularDomain& D, const WindingClass& expected);

/// f on C*: NotInjectivePair when f has poles at both 0 and infinity.
/// Throws InvalidParameter if f has a pole away from 0.
Certificate guard_not_proper_first(const RationalFunction& f);

/// sigma = c z^k required (InvalidParameter otherwise). Reports Trivial,
/// NotASymmetry, or NoNullInjectionWithThisF when f o sigma = f, sigma != id.
Certificate guard_symmetry(const RationalFunction& f, const RationalFunction& sigma);

std::string to_string(CertificateKind kind);
std::string to_string(Verdict verdict);
std::string to_string(GuardOutcome outcome);

/// Roots of p as witnesses: exact points if all are Gaussian rationals,
/// otherwise decimal approximations in the detail field.
std::vector<Witness> root_witnesses(const Polynomial& p, const std::string& label);

}  // namespace okaforge
