#ifndef PINPERM_REPORT_HPP
#define PINPERM_REPORT_HPP

#include <string>

#include "pinperm/decision.hpp"

namespace pinperm {

// Human-readable report, one verdict per line.
std::string report_text(const FinitenessReport& report, bool include_witness);

// JSON report with the fixed keys
// {pin, alternations, wedge1, wedge2, overall, witnesses, timings}.
std::string report_json(const FinitenessReport& report);

} // namespace pinperm

#endif
