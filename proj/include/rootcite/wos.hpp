#pragma once

#include <istream>
#include <string_view>

#include "rootcite/record.hpp"

namespace rootcite {

/// Parse a Web of Science field-tagged plain-text export (UTF-8). Records
/// are delimited by the ER end tag; fields are two-letter tags at line
/// start with indented continuation lines. CR continuation lines carry one
/// cited reference each.
ParseResult parse_wos(std::istream& in, std::string_view source_name = "<input>");

ParseResult parse_wos_text(std::string_view text, std::string_view source_name = "<input>");

}  // namespace rootcite
