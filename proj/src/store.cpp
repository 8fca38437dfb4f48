#include "rootcite/store.hpp"

#include <fstream>
#include <string>

#include "json.hpp"
#include "rootcite/errors.hpp"
#include "rootcite/text.hpp"

namespace rootcite {

namespace {

using nlohmann::json;  // plain json keeps keys sorted, which keeps lines stable

json to_json(const SourceRecord& rec) {
    json j;
    j["id"] = rec.record_id;
    j["format"] = std::string(source_format_code(rec.source_format));
    j["title"] = rec.title_native;
    if (rec.title_english) j["title_en"] = *rec.title_english;
    j["authors"] = rec.authors;
    j["journal"] = rec.journal;
    if (rec.pub_year) j["year"] = *rec.pub_year;
    j["keywords"] = rec.keywords;
    json refs = json::array();
    for (const CitedReference& ref : rec.references) {
        json r;
        r["raw"] = ref.raw_string;
        if (ref.ref_year) r["year"] = *ref.ref_year;
        r["lang"] = std::string(language_code(ref.language));
        r["ord"] = ref.ordinal;
        refs.push_back(std::move(r));
    }
    j["refs"] = std::move(refs);
    return j;
}

SourceRecord from_json(const json& j, std::size_t line_no) {
    auto fail = [line_no](const std::string& what) -> StoreFormatError {
        return StoreFormatError("store line " + std::to_string(line_no) + ": " + what);
    };
    try {
        SourceRecord rec;
        rec.record_id = j.at("id").get<std::string>();
        auto fmt = source_format_from_code(j.at("format").get<std::string>());
        if (!fmt) throw fail("unknown format code");
        rec.source_format = *fmt;
        rec.title_native = j.at("title").get<std::string>();
        if (j.contains("title_en")) rec.title_english = j.at("title_en").get<std::string>();
        rec.authors = j.at("authors").get<std::vector<std::string>>();
        rec.journal = j.at("journal").get<std::string>();
        if (j.contains("year")) rec.pub_year = j.at("year").get<int>();
        rec.keywords = j.at("keywords").get<std::vector<std::string>>();
        for (const json& r : j.at("refs")) {
            CitedReference ref;
            ref.raw_string = r.at("raw").get<std::string>();
            if (r.contains("year")) ref.ref_year = r.at("year").get<int>();
            auto lang = language_from_code(r.at("lang").get<std::string>());
            if (!lang) throw fail("unknown language code");
            ref.language = *lang;
            ref.ordinal = r.at("ord").get<std::size_t>();
            ref.citing_record_id = rec.record_id;
            rec.references.push_back(std::move(ref));
        }
        return rec;
    } catch (const json::exception& e) {
        throw fail(e.what());
    }
}

}  // namespace

void append_records(std::ostream& out, const std::vector<SourceRecord>& records) {
    for (const SourceRecord& rec : records) out << to_json(rec).dump() << '\n';
}

void append_records(const std::filesystem::path& store_path,
                    const std::vector<SourceRecord>& records) {
    std::ofstream out(store_path, std::ios::app | std::ios::binary);
    if (!out) throw PermissionDeniedError("cannot open store for writing: " +
                                          store_path.string());
    append_records(out, records);
}

std::vector<SourceRecord> load_records(std::istream& in) {
    std::vector<SourceRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw StoreFormatError("store line " + std::to_string(line_no) + ": " + e.what());
        }
        records.push_back(from_json(j, line_no));
    }
    if (records.empty()) throw EmptyStoreError("store holds no records");
    return records;
}

std::vector<SourceRecord> load_records(const std::filesystem::path& store_path) {
    std::ifstream in(store_path, std::ios::binary);
    if (!in) throw EmptyStoreError("store not found: " + store_path.string());
    return load_records(in);
}

}  // namespace rootcite
