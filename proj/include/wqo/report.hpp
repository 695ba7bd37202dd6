#pragma once

#include <string>

#include "wqo/decision.hpp"

namespace wqo {

enum class ReportFormat { text, json };

/// DecisionReport serialization. JSON keys are stable and identical
/// invocations are byte-identical.
std::string emit_report(const DecisionReport& r, ReportFormat format);

}  // namespace wqo
