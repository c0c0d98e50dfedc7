#include "okaforge/map_pair.hpp"

namespace okaforge {

std::string Scalar::to_string() const {
  std::string c = coeff.to_string();
  if (pi_power == 0) return c;
  if (coeff.is_one()) return "pi";
  if (coeff == GaussianRational(-1)) return "-pi";
  return "(" + c + ")*pi";
}

std::optional<RationalFunction> MapPair::second_rational() const {
  if (has_exp_second()) return std::nullopt;
  return factored().expand();
}

std::string MapPair::to_string() const {
  std::string s = "(" + first.to_string() + ", ";
  if (has_exp_second()) {
    s += "exp((" + exp_linear().lambda.to_string() + ")*z)";
  } else {
    s += factored().to_string();
  }
  return s + ")";
}

}  // namespace okaforge
