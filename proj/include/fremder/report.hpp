#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fremder/core.hpp"
#include "fremder/general.hpp"
#include "fremder/structured.hpp"

namespace fremder {

inline constexpr std::string_view kReportSchema = "fremder-report/1";

/// Machine-readable result of one CLI command.
struct Report {
    std::string command;
    std::string input_digest;  // empty when the input could not be read
    std::string status;
    std::optional<FremderSolution> solution;
    std::optional<FremdervalueRegion> region;
    std::optional<std::vector<GeneigPair>> pairs;
    std::map<std::string, std::string> diagnostics;
};

/// Every top-level key is always present; absent parts are null.
nlohmann::json to_json(const Report& r);

/// Line-oriented "key: value" rendering; reals use 17 significant digits.
std::string render_text(const Report& r);

/// %.17g
std::string format_real(double v);

}  // namespace fremder
