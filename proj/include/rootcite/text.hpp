#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rootcite {

enum class Language { Chinese, English };

std::string_view language_code(Language lang);                    // "zh" / "en"
std::optional<Language> language_from_code(std::string_view code);

/// Decode UTF-8 into codepoints. Invalid byte sequences decode to U+FFFD,
/// one byte at a time, so decoding is total and deterministic.
std::vector<char32_t> utf8_codepoints(std::string_view text);

void append_utf8(std::string& out, char32_t cp);

std::string codepoints_to_utf8(const std::vector<char32_t>& cps);

// CJK Unified Ideographs (U+4E00-9FFF) and Extension A (U+3400-4DBF).
bool is_cjk_ideograph(char32_t cp);

// Ideographs plus the CJK symbols/punctuation block (U+3000-303F);
// this is the predicate behind language classification.
bool is_cjk_for_language(char32_t cp);

/// Trim ASCII whitespace and the ideographic space (U+3000) from both ends.
std::string_view trim(std::string_view s);

/// Extract a publication year from an arbitrary reference string: the last
/// run of exactly four ASCII digits whose value lies in [1400, 2100].
/// Runs longer than four digits never match. Absent when no run qualifies.
std::optional<int> extract_year(std::string_view raw);

/// First qualifying 4-digit run instead of the last; used for the CSSCI
/// year/volume/issue field where the year leads.
std::optional<int> extract_first_year(std::string_view raw);

/// Chinese iff the string contains at least one CJK codepoint
/// (ideographs or the CJK punctuation block), else English.
/// Throws EmptyStringError when the trimmed input is empty.
Language classify_language(std::string_view raw);

/// Split on a separator, trim each piece, drop empties.
std::vector<std::string> split_fields(std::string_view value, char sep);

inline constexpr int kMinYear = 1400;
inline constexpr int kMaxYear = 2100;

}  // namespace rootcite
