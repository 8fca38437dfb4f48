#include "rootcite/peaks.hpp"

#include <algorithm>
#include <cctype>

#include "rootcite/errors.hpp"
#include "rootcite/text.hpp"

namespace rootcite {

std::vector<int> find_peaks(const std::vector<SpectroscopyRow>& rows, std::int64_t min_dev) {
    if (rows.empty()) throw EmptyInputError("find_peaks: no rows");

    std::vector<int> years;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::int64_t dev = rows[i].median_dev;
        if (dev < min_dev) continue;
        if (i > 0 && rows[i - 1].median_dev >= dev) continue;  // left tie suppresses
        if (i + 1 < rows.size() && rows[i + 1].median_dev > dev) continue;
        years.push_back(rows[i].rpy);
    }
    return years;
}

std::string_view document_kind_name(DocumentKind kind) {
    switch (kind) {
        case DocumentKind::Journal: return "journal";
        case DocumentKind::Book: return "book";
        case DocumentKind::Other: return "other";
    }
    return "other";
}

namespace {

bool contains_token_ci(std::string_view haystack, std::string_view token) {
    if (token.size() > haystack.size()) return false;
    for (std::size_t i = 0; i + token.size() <= haystack.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < token.size(); ++j) {
            char a = haystack[i + j];
            char b = token[j];
            if (std::tolower(static_cast<unsigned char>(a)) !=
                std::tolower(static_cast<unsigned char>(b))) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

// A segment like ", V16" or ", P317" (the usual volume/page shorthand), a
// "12 (1)" volume-issue tail, or a CJK volume/issue marker.
bool has_volume_or_issue(std::string_view s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        char c = s[i];
        if (c != 'V' && c != 'v' && c != 'P' && c != 'p') continue;
        if (!std::isdigit(static_cast<unsigned char>(s[i + 1]))) continue;
        if (i == 0) continue;
        char prev = s[i - 1];
        if (prev == ' ' || prev == ',' || prev == '(') return true;
    }
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        // an issue number in parentheses right after a volume number; an
        // author-year "(1926)" has no digit before the parenthesis
        if (s[i] != '(' || !std::isdigit(static_cast<unsigned char>(s[i + 1]))) continue;
        std::size_t back = i;
        while (back > 0 && s[back - 1] == ' ') --back;
        if (back > 0 && std::isdigit(static_cast<unsigned char>(s[back - 1]))) return true;
    }
    return s.find("卷") != std::string_view::npos ||  // 卷
           s.find("期") != std::string_view::npos;    // 期
}

bool has_publisher_segment(std::string_view s) {
    return s.find("出版社") != std::string_view::npos ||  // 出版社
           contains_token_ci(s, "press") || contains_token_ci(s, "publishing") ||
           contains_token_ci(s, "publisher");
}

}  // namespace

DocumentKind classify_document_kind(std::string_view canonical) {
    bool volissue = has_volume_or_issue(canonical);
    if (has_publisher_segment(canonical) && !volissue) return DocumentKind::Book;
    if (volissue) return DocumentKind::Journal;
    return DocumentKind::Other;
}

PeakReport year_report(const std::vector<ReferenceCluster>& clusters, int rpy,
                       std::size_t top_k) {
    PeakReport report;
    report.rpy = rpy;
    for (const ReferenceCluster& cluster : clusters) {
        if (!cluster.rpy || *cluster.rpy != rpy) continue;
        report.year_total += cluster.count;
        PeakEntry entry;
        entry.canonical = cluster.canonical;
        entry.count = cluster.count;
        entry.language = cluster.language;
        entry.kind = classify_document_kind(cluster.canonical);
        report.entries.push_back(std::move(entry));
    }
    std::sort(report.entries.begin(), report.entries.end(),
              [](const PeakEntry& a, const PeakEntry& b) {
                  if (a.count != b.count) return a.count > b.count;
                  return a.canonical < b.canonical;
              });
    if (report.entries.size() > top_k) report.entries.resize(top_k);
    for (PeakEntry& entry : report.entries)
        entry.percentage =
            100.0 * static_cast<double>(entry.count) / static_cast<double>(report.year_total);
    return report;
}

}  // namespace rootcite
