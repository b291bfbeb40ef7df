#pragma once

#include <string>

#include "json.hpp"

#include "silk/kernel.hpp"
#include "silk/silk.hpp"

namespace silk {

inline constexpr int kFormatVersion = 1;

// Fuel from SILK_FUEL, or the default when unset or unparsable.
std::size_t env_fuel();

nlohmann::json counts_json(const RuleCounts& c);

// {format_version, status, failures, counts, inferences, fuel, strategy,
// rewrite_steps}
nlohmann::json report_json(const CheckReport& r, const std::string& status, std::size_t fuel);

// Failures as "path [rule]: message", one per line.
std::string report_text(const CheckReport& r);
std::string counts_text(const RuleCounts& c);

// One line per group, newest first: `id: < step ; [base] >, ... |closed`.
std::string to_string(const ComponentCollection& c);
std::string to_string(const ComponentPair& p);

}  // namespace silk
