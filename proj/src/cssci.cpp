#include "rootcite/cssci.hpp"

#include <sstream>
#include <string>

#include "rootcite/text.hpp"

namespace rootcite {

namespace {

constexpr std::string_view kOpenBracket = "【";
constexpr std::string_view kCloseBracket = "】";
constexpr std::string_view kIdeographicSpace = "\xE3\x80\x80";  // U+3000

constexpr std::string_view kTagTitle = "来源篇名";
constexpr std::string_view kTagTitleEnglish = "英文篇名";
constexpr std::string_view kTagAuthors = "来源作者";
constexpr std::string_view kTagJournal = "期刊";
constexpr std::string_view kTagYearVolumeIssue = "年代卷期";
constexpr std::string_view kTagKeywords = "关键词";
constexpr std::string_view kTagReferences = "参考文献";

// Tag names with internal alignment spaces removed, e.g. 期 刊 -> 期刊.
std::string canonical_tag(std::string_view tag) {
    std::string out;
    out.reserve(tag.size());
    std::size_t i = 0;
    while (i < tag.size()) {
        if (tag[i] == ' ' || tag[i] == '\t') {
            ++i;
            continue;
        }
        if (tag.substr(i, kIdeographicSpace.size()) == kIdeographicSpace) {
            i += kIdeographicSpace.size();
            continue;
        }
        out.push_back(tag[i]);
        ++i;
    }
    return out;
}

struct TagLine {
    std::string tag;    // canonical form
    std::string value;  // text after the closing bracket, trimmed
};

std::optional<TagLine> split_tag_line(std::string_view line) {
    if (line.substr(0, kOpenBracket.size()) != kOpenBracket) return std::nullopt;
    const auto close = line.find(kCloseBracket, kOpenBracket.size());
    if (close == std::string_view::npos) return std::nullopt;
    TagLine out;
    out.tag = canonical_tag(line.substr(kOpenBracket.size(), close - kOpenBracket.size()));
    out.value = std::string(trim(line.substr(close + kCloseBracket.size())));
    return out;
}

// Leading "N." list numbering of a cited-reference entry.
std::optional<std::pair<std::size_t, std::string>> split_numbered_entry(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && line[i] >= '0' && line[i] <= '9') ++i;
    if (i == 0 || i >= line.size() || line[i] != '.') return std::nullopt;
    std::size_t number = 0;
    for (std::size_t k = 0; k < i; ++k) number = number * 10 + static_cast<std::size_t>(line[k] - '0');
    return std::make_pair(number, std::string(trim(line.substr(i + 1))));
}

struct PendingRecord {
    std::string title_native;
    std::string title_english;
    std::string authors;
    std::string journal;
    std::string year_field;
    std::string keywords;
    struct Entry {
        std::size_t number;
        std::string text;
    };
    std::vector<Entry> entries;
};

void finalize_record(PendingRecord&& pending, std::size_t index, std::string_view source_name,
                     ParseResult& result) {
    SourceRecord rec;
    rec.source_format = SourceFormat::Cssci;
    rec.record_id = std::string(source_name) + "#" + std::to_string(index);
    rec.title_native = std::move(pending.title_native);
    if (!pending.title_english.empty()) rec.title_english = std::move(pending.title_english);
    rec.authors = split_fields(pending.authors, '/');
    rec.journal = std::move(pending.journal);
    rec.keywords = split_fields(pending.keywords, '/');
    rec.pub_year = extract_first_year(pending.year_field);
    if (!rec.pub_year) ++result.diagnostics.missing_year;

    for (auto& entry : pending.entries) {
        if (entry.text.empty()) continue;
        CitedReference ref;
        ref.raw_string = std::move(entry.text);
        ref.citing_record_id = rec.record_id;
        ref.ordinal = entry.number;
        ref.language = classify_language(ref.raw_string);
        ref.ref_year = extract_year(ref.raw_string);
        // In-press grace: a reference may postdate its citer by at most one year.
        if (ref.ref_year && rec.pub_year && *ref.ref_year > *rec.pub_year + 1) {
            ref.ref_year.reset();
        }
        rec.references.push_back(std::move(ref));
    }
    result.records.push_back(std::move(rec));
}

}  // namespace

ParseResult parse_cssci_text(std::string_view text, std::string_view source_name) {
    ParseResult result;

    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::optional<PendingRecord> current;
    bool in_references = false;
    std::string* current_field = nullptr;
    std::size_t record_index = 0;
    bool preamble_reported = false;  // non-record content before the first start marker

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
        const auto line = trim(raw_line);
        if (line.empty()) continue;

        auto tagged = split_tag_line(line);
        if (tagged && tagged->tag == kTagTitle) {
            if (current) {
                ++record_index;
                finalize_record(std::move(*current), record_index, source_name, result);
            }
            current.emplace();
            current->title_native = tagged->value;
            current_field = &current->title_native;
            in_references = false;
            continue;
        }

        if (!current) {
            if (!preamble_reported) {
                preamble_reported = true;
                result.diagnostics.skipped.push_back(
                    {std::string(source_name), line_no, "missing record start marker"});
            }
            continue;
        }

        if (tagged) {
            in_references = false;
            current_field = nullptr;
            const auto& tag = tagged->tag;
            if (tag == kTagTitleEnglish) {
                current->title_english = tagged->value;
                current_field = &current->title_english;
            } else if (tag == kTagAuthors) {
                current->authors = tagged->value;
                current_field = &current->authors;
            } else if (tag == kTagJournal) {
                current->journal = tagged->value;
                current_field = &current->journal;
            } else if (tag == kTagYearVolumeIssue) {
                current->year_field = tagged->value;
                current_field = &current->year_field;
            } else if (tag == kTagKeywords) {
                current->keywords = tagged->value;
                current_field = &current->keywords;
            } else if (tag == kTagReferences) {
                in_references = true;
            }
            continue;
        }

        if (in_references) {
            if (auto entry = split_numbered_entry(line)) {
                current->entries.push_back({entry->first, std::move(entry->second)});
            } else if (!current->entries.empty()) {
                // Wrapped reference line: belongs to the previous entry.
                auto& prev = current->entries.back().text;
                if (!prev.empty()) prev += ' ';
                prev += std::string(line);
            }
            continue;
        }

        if (current_field) {
            if (!current_field->empty()) *current_field += ' ';
            *current_field += std::string(line);
        }
    }

    if (current) {
        ++record_index;
        finalize_record(std::move(*current), record_index, source_name, result);
    }
    return result;
}

ParseResult parse_cssci(std::istream& in, std::string_view source_name) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    return parse_cssci_text(text, source_name);
}

}  // namespace rootcite
