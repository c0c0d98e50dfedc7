#pragma once

#include <optional>
#include <string>
#include <variant>

#include "okaforge/exact/rational_function.hpp"

namespace okaforge {

/// coeff * pi^pi_power with pi_power in {0, 1}.
struct Scalar {
  GaussianRational coeff{1};
  int pi_power = 0;

  bool is_zero() const { return coeff.is_zero(); }
  std::string to_string() const;
  friend bool operator==(const Scalar&, const Scalar&) = default;
};

/// z -> exp(lambda z).
struct ExpLinear {
  Scalar lambda;
  friend bool operator==(const ExpLinear&, const ExpLinear&) = default;
};

using SecondComponent = std::variant<FactoredRational, ExpLinear>;

/// A candidate map (first, second) into C x C*.
struct MapPair {
  RationalFunction first;
  SecondComponent second;

  bool has_exp_second() const { return std::holds_alternative<ExpLinear>(second); }
  const FactoredRational& factored() const { return std::get<FactoredRational>(second); }
  const ExpLinear& exp_linear() const { return std::get<ExpLinear>(second); }
  /// The second component expanded, when it is rational.
  std::optional<RationalFunction> second_rational() const;

  /// "(first, second)" in the infix grammar accepted by the CLI.
  std::string to_string() const;
  friend bool operator==(const MapPair&, const MapPair&) = default;
};

}  // namespace okaforge
