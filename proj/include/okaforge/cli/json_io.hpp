#pragma once

#include <json.hpp>

#include "okaforge/constructors.hpp"
#include "okaforge/doublepoints.hpp"
#include "okaforge/projection.hpp"
#include "okaforge/verifiers.hpp"

namespace okaforge::cli {

using Json = nlohmann::ordered_json;

Json to_json(const GaussianRational& z);
Json to_json(const Polynomial& p);
Json to_json(const RationalFunction& f);
Json to_json(const FactoredRational& g);
Json to_json(const MapPair& m);
Json to_json(const WindingClass& w);
Json to_json(const Certificate& c);
Json to_json(const numeric::BigFloat& x);
Json to_json(const numeric::BigComplex& z);
Json to_json(const DoublePointReport& r);
Json to_json(const ProjectionCertificate& c);
Json to_json(const ClearanceReport& r);
Json to_json(const ReductionResult& r);
Json to_json(const PerturbationLog& log);
Json to_json(const Violation& v);

/// Inverses of the structured forms above. Throw ParseError.
GaussianRational gaussian_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
RationalFunction rational_function_from_json(const Json& j);
FactoredRational factored_from_json(const Json& j);
/// Accepts the structured object or an infix string.
MapPair map_from_json(const Json& j);

}  // namespace okaforge::cli
