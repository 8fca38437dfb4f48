#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootcite/cluster.hpp"
#include "rootcite/spectroscopy.hpp"

namespace rootcite {

inline constexpr std::int64_t kDefaultMinDev = 5;

/// Candidate peak years: median_dev ≥ min_dev and a local maximum over the
/// immediate neighbors, where a tie with the left neighbor suppresses the
/// right year (plateaus report their first year only). Returns ascending
/// years. These are candidates for expert review, not verdicts.
/// Throws EmptyInputError.
std::vector<int> find_peaks(const std::vector<SpectroscopyRow>& rows, std::int64_t min_dev);

enum class DocumentKind { Journal, Book, Other };

std::string_view document_kind_name(DocumentKind kind);

/// Guess what kind of work a canonical reference string describes. A
/// publisher segment without volume/issue marks reads as a book; a
/// volume/issue marker as a journal article; anything else is Other.
DocumentKind classify_document_kind(std::string_view canonical);

struct PeakEntry {
    std::string canonical;
    std::int64_t count = 0;
    double percentage = 0.0;  // 100 * count / year_total
    Language language = Language::English;
    std::optional<DocumentKind> kind;
};

struct PeakReport {
    int rpy = 0;
    std::int64_t year_total = 0;
    std::vector<PeakEntry> entries;  // count descending, ties by canonical ascending
};

/// Rank the clusters cited to a given year. Entries are truncated to top_k
/// (top_k ≥ 1); a year nothing cites yields an empty report.
PeakReport year_report(const std::vector<ReferenceCluster>& clusters, int rpy,
                       std::size_t top_k);

}  // namespace rootcite
