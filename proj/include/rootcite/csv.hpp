#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rootcite/peaks.hpp"
#include "rootcite/spectroscopy.hpp"

namespace rootcite {

/// Quote a field when it contains a comma, quote, or line break; embedded
/// quotes are doubled. Plain fields pass through unchanged.
std::string csv_escape(std::string_view field);

/// Header `rpy,count,median_dev`, one row per year ascending, LF endings.
void write_median_csv(std::ostream& out, const std::vector<SpectroscopyRow>& rows);

/// Header `rpy,canonical,count,percentage,language`; reports in the given
/// order (callers pass rpy-ascending), entries in rank order; percentage with
/// one decimal place.
void write_result_csv(std::ostream& out, const std::vector<PeakReport>& reports);

}  // namespace rootcite
