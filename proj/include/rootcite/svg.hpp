#pragma once

#include <ostream>
#include <string_view>
#include <vector>

#include "rootcite/spectroscopy.hpp"

namespace rootcite {

/// Self-contained two-series line chart (count in red, median deviation in
/// blue) against reference publication year. Output is plain SVG with no
/// external assets, scripts, or timestamps, so identical rows yield identical
/// bytes. Throws EmptyInputError when rows is empty.
void write_spectrum_svg(std::ostream& out, const std::vector<SpectroscopyRow>& rows,
                        std::string_view source_label);

}  // namespace rootcite
