#pragma once

#include <json.hpp>

#include "cpcompat/acceptance.hpp"
#include "cpcompat/model.hpp"

namespace cpcompat {

inline constexpr int kReportVersion = 1;

/// Report document described in REPORT.md. Keys keep insertion order.
nlohmann::ordered_json report_to_json(const ComparisonReport& report,
                                      const Verdict* verdict = nullptr);

}  // namespace cpcompat
