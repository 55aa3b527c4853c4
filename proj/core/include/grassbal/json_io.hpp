#pragma once

// JSON views of the core data types. Splitting types are descending integer
// arrays; rationals are "num/den" strings.

#include <nlohmann/json.hpp>

#include "grassbal/cohomology.hpp"
#include "grassbal/induction.hpp"
#include "grassbal/predictor.hpp"
#include "grassbal/splitting_type.hpp"

namespace grassbal {

using Json = nlohmann::ordered_json;

Json to_json(const SplittingType& t);
Json to_json(const DegreeInterval& iv);
Json to_json(const Rational& r);
Json to_json(const ForcedSummand& f);
Json to_json(const PredictionReport& report);
Json to_json(const CheckResult& check);
Json to_json(const Conclusion& conclusion);
Json to_json(const Certificate& cert);
Json to_json(const InstanceParams& inst);
Json to_json(const LemmaReport& report);
Json to_json(const ComputedBundle& bundle);
Json to_json(const CurveChart& chart);

SplittingType splitting_type_from_json(const Json& j);
Rational rational_from_json(const Json& j);

}  // namespace grassbal
