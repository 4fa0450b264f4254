#pragma once

#include <json.hpp>

#include "periodica/classification.hpp"
#include "periodica/coset_table.hpp"
#include "periodica/counting.hpp"
#include "periodica/presentation.hpp"

namespace periodica {

// Big integers are written as decimal strings.

nlohmann::ordered_json to_json(const CountReport& report);
nlohmann::ordered_json to_json(const AutDescription& aut);
nlohmann::ordered_json to_json(const SmallValueTable& table);
nlohmann::ordered_json to_json(const SmallAlphaClassification& result);
nlohmann::ordered_json to_json(const LowIndexClass& cls, const Presentation& p);

}  // namespace periodica
