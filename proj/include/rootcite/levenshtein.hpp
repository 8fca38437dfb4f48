#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace rootcite {

/// Edit distance over Unicode codepoints (insert, delete, substitute at
/// unit cost).
std::size_t levenshtein_distance(std::span<const char32_t> a, std::span<const char32_t> b);

/// 1 - distance / max(len_a, len_b) over codepoints; 1.0 when both empty.
double levenshtein_similarity(std::string_view a, std::string_view b);

}  // namespace rootcite
