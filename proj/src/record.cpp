#include "rootcite/record.hpp"

namespace rootcite {

std::string_view source_format_code(SourceFormat fmt) {
    return fmt == SourceFormat::Cssci ? "cssci" : "wos";
}

std::optional<SourceFormat> source_format_from_code(std::string_view code) {
    if (code == "cssci") return SourceFormat::Cssci;
    if (code == "wos") return SourceFormat::Wos;
    return std::nullopt;
}

}  // namespace rootcite
