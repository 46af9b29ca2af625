#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "boolcomb/booldim.hpp"
#include "boolcomb/decompose.hpp"
#include "boolcomb/extremal.hpp"
#include "boolcomb/invariants.hpp"
#include "boolcomb/labeling.hpp"

namespace boolcomb {

nlohmann::json to_json(const ParamReport& r);
nlohmann::json to_json(const Decomposition& d, std::string_view method);
nlohmann::json to_json(const HnkReport& r);
nlohmann::json to_json(const TheoremCheck& c, std::uint64_t seed);
nlohmann::json to_json(const DimResult& r, const Graph& target, const ClassTag& tag, std::string_view mode);
nlohmann::json to_json(const ComposedLabels& l);
nlohmann::json to_json(const std::vector<Partition>& seq, bool certified);

}  // namespace boolcomb
