#include "rootcite/wos.hpp"

#include <cctype>
#include <sstream>

#include "rootcite/text.hpp"

namespace rootcite {

namespace {

bool is_tag_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// "XX value" or a bare "XX"; continuation lines start with whitespace.
std::optional<std::pair<std::string, std::string>> split_tag_line(std::string_view line) {
    if (line.size() < 2 || !is_tag_char(line[0]) || !is_tag_char(line[1])) return std::nullopt;
    if (line.size() > 2 && line[2] != ' ') return std::nullopt;
    std::string tag(line.substr(0, 2));
    std::string value(trim(line.substr(2)));
    return std::make_pair(std::move(tag), std::move(value));
}

struct PendingRecord {
    std::string title;
    std::string journal;
    std::string year_field;
    std::vector<std::string> authors;
    std::string keywords;
    std::vector<std::string> cr_entries;
    std::size_t start_line = 0;
};

// Second comma-separated segment of a CR entry ("AUTHOR, YEAR, SOURCE, ...").
std::optional<int> cr_segment_year(std::string_view entry) {
    auto first = entry.find(',');
    if (first == std::string_view::npos) return std::nullopt;
    auto second = entry.find(',', first + 1);
    const auto segment =
        trim(entry.substr(first + 1, second == std::string_view::npos ? std::string_view::npos
                                                                      : second - first - 1));
    if (segment.size() != 4) return std::nullopt;
    int value = 0;
    for (char c : segment) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
    }
    if (value < kMinYear || value > kMaxYear) return std::nullopt;
    return value;
}

void finalize_record(PendingRecord&& pending, std::size_t index, std::string_view source_name,
                     ParseResult& result) {
    SourceRecord rec;
    rec.source_format = SourceFormat::Wos;
    rec.record_id = std::string(source_name) + "#" + std::to_string(index);
    rec.title_native = std::move(pending.title);
    rec.journal = std::move(pending.journal);
    rec.authors = std::move(pending.authors);
    rec.pub_year = extract_first_year(pending.year_field);
    if (!rec.pub_year) ++result.diagnostics.missing_year;

    rec.keywords = split_fields(pending.keywords, ';');

    std::size_t ordinal = 0;
    for (auto& entry : pending.cr_entries) {
        if (entry.empty()) continue;
        CitedReference ref;
        ref.raw_string = std::move(entry);
        ref.citing_record_id = rec.record_id;
        ref.ordinal = ++ordinal;
        ref.language = classify_language(ref.raw_string);
        ref.ref_year = cr_segment_year(ref.raw_string);
        if (!ref.ref_year) ref.ref_year = extract_year(ref.raw_string);
        if (ref.ref_year && rec.pub_year && *ref.ref_year > *rec.pub_year + 1) {
            ref.ref_year.reset();
        }
        rec.references.push_back(std::move(ref));
    }
    result.records.push_back(std::move(rec));
}

}  // namespace

ParseResult parse_wos_text(std::string_view text, std::string_view source_name) {
    ParseResult result;

    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::optional<PendingRecord> current;
    std::string active_tag;
    std::size_t record_index = 0;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            if (pos == text.size()) break;
            eol = text.size();
        }
        ++line_no;
        std::string_view raw_line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (!raw_line.empty() && raw_line.back() == '\r') raw_line.remove_suffix(1);
        if (trim(raw_line).empty()) continue;

        auto tagged = split_tag_line(raw_line);
        if (tagged) {
            const auto& tag = tagged->first;
            if (tag == "ER") {
                if (current) {
                    ++record_index;
                    finalize_record(std::move(*current), record_index, source_name, result);
                    current.reset();
                }
                active_tag.clear();
                continue;
            }
            if (tag == "FN" || tag == "VR" || tag == "EF") {
                active_tag.clear();
                continue;
            }
            if (!current) {
                current.emplace();
                current->start_line = line_no;
            }
            active_tag = tag;
            auto& value = tagged->second;
            if (tag == "TI") {
                current->title = std::move(value);
            } else if (tag == "SO") {
                current->journal = std::move(value);
            } else if (tag == "PY") {
                current->year_field = std::move(value);
            } else if (tag == "AU") {
                if (!value.empty()) current->authors.push_back(std::move(value));
            } else if (tag == "DE") {
                current->keywords = std::move(value);
            } else if (tag == "CR") {
                if (!value.empty()) current->cr_entries.push_back(std::move(value));
            }
            continue;
        }

        // Continuation line for the active tag.
        if (!current || active_tag.empty()) continue;
        const auto value = trim(raw_line);
        if (value.empty()) continue;
        if (active_tag == "CR") {
            current->cr_entries.emplace_back(value);
        } else if (active_tag == "AU") {
            current->authors.emplace_back(value);
        } else if (active_tag == "TI") {
            if (!current->title.empty()) current->title += ' ';
            current->title += std::string(value);
        } else if (active_tag == "SO") {
            if (!current->journal.empty()) current->journal += ' ';
            current->journal += std::string(value);
        } else if (active_tag == "DE") {
            if (!current->keywords.empty()) current->keywords += ' ';
            current->keywords += std::string(value);
        }
    }

    if (current) {
        result.diagnostics.skipped.push_back(
            {std::string(source_name), current->start_line, "record not terminated by ER"});
    }
    return result;
}

ParseResult parse_wos(std::istream& in, std::string_view source_name) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    return parse_wos_text(text, source_name);
}

}  // namespace rootcite
