#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootcite/text.hpp"

namespace rootcite {

enum class SourceFormat { Cssci, Wos };

std::string_view source_format_code(SourceFormat fmt);                    // "cssci" / "wos"
std::optional<SourceFormat> source_format_from_code(std::string_view code);

/// One raw cited-reference occurrence inside a citing record.
struct CitedReference {
    std::string raw_string;            // as written, line breaks normalized away
    std::optional<int> ref_year;       // in [1400, citer pub_year + 1] when present
    Language language = Language::English;
    std::string citing_record_id;
    std::size_t ordinal = 0;           // 1-based position in the reference list
};

/// One citing publication with its attached reference occurrences.
struct SourceRecord {
    std::string record_id;             // unique within one ingested corpus
    std::string title_native;
    std::optional<std::string> title_english;
    std::vector<std::string> authors;
    std::string journal;
    std::optional<int> pub_year;       // absent when the year field was unparseable
    std::vector<std::string> keywords;
    std::vector<CitedReference> references;
    SourceFormat source_format = SourceFormat::Cssci;
};

/// Parser-level diagnostics. Skipped records (malformed input) are tallied
/// individually so callers can emit one SKIP line each; records retained
/// without a publication year are only counted.
struct ParseDiagnostics {
    struct Skip {
        std::string file;
        std::size_t line = 0;
        std::string reason;
    };
    std::vector<Skip> skipped;
    std::size_t missing_year = 0;

    void merge(const ParseDiagnostics& other) {
        skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
        missing_year += other.missing_year;
    }
};

struct ParseResult {
    std::vector<SourceRecord> records;
    ParseDiagnostics diagnostics;
};

}  // namespace rootcite
