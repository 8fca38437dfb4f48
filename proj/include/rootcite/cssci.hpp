#pragma once

#include <istream>
#include <string_view>

#include "rootcite/record.hpp"

namespace rootcite {

/// Parse a CSSCI plain-text export (UTF-8). A record starts at each
/// 【来源篇名】 label; the cited-reference block follows 【参考文献】 as a
/// numbered list, one reference per entry, entries may wrap across lines.
/// `source_name` seeds record ids and diagnostic locations.
ParseResult parse_cssci(std::istream& in, std::string_view source_name = "<input>");

ParseResult parse_cssci_text(std::string_view text, std::string_view source_name = "<input>");

}  // namespace rootcite
