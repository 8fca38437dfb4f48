#include "rootcite/csv.hpp"

#include <cstdio>

#include "rootcite/text.hpp"

namespace rootcite {

std::string csv_escape(std::string_view field) {
    bool needs_quoting = field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quoting) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_median_csv(std::ostream& out, const std::vector<SpectroscopyRow>& rows) {
    out << "rpy,count,median_dev\n";
    for (const SpectroscopyRow& row : rows)
        out << row.rpy << ',' << row.count << ',' << row.median_dev << '\n';
}

void write_result_csv(std::ostream& out, const std::vector<PeakReport>& reports) {
    out << "rpy,canonical,count,percentage,language\n";
    char pct[32];
    for (const PeakReport& report : reports) {
        for (const PeakEntry& entry : report.entries) {
            std::snprintf(pct, sizeof pct, "%.1f", entry.percentage);
            out << report.rpy << ',' << csv_escape(entry.canonical) << ',' << entry.count
                << ',' << pct << ',' << language_code(entry.language) << '\n';
        }
    }
}

}  // namespace rootcite
