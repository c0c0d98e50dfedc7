#pragma once

#include <string>
#include <vector>

#include "okaforge/domains.hpp"
#include "okaforge/map_pair.hpp"

namespace okaforge::cli {

/// Infix rational function in z: integers, i, + - * / ^, parentheses,
/// implicit multiplication. Throws ParseError.
RationalFunction parse_rational_function(const std::string& text);

/// "(first, second)" where second is a rational function with Gaussian
/// rational zeros and poles, or exp(lambda*z) with lambda = c or c*pi.
MapPair parse_map(const std::string& text);

/// "0,1,-1/2+i"; empty text gives an empty list.
std::vector<GaussianRational> parse_points(const std::string& text);
std::vector<int> parse_ints(const std::string& text);
/// "center:radius;center:radius".
std::vector<Hole> parse_holes(const std::string& text);

}  // namespace okaforge::cli
