#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <vector>

#include "rootcite/record.hpp"

namespace rootcite {

/// Serialize records one per line (UTF-8, LF). Key order inside a line is
/// sorted, so identical records always produce identical bytes.
void append_records(std::ostream& out, const std::vector<SourceRecord>& records);
void append_records(const std::filesystem::path& store_path,
                    const std::vector<SourceRecord>& records);

/// Read every record back. Throws EmptyStoreError when the file is missing or
/// holds no records, StoreFormatError on malformed lines.
std::vector<SourceRecord> load_records(std::istream& in);
std::vector<SourceRecord> load_records(const std::filesystem::path& store_path);

}  // namespace rootcite
