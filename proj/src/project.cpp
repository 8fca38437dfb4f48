#include "rootcite/project.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <system_error>

#include "rootcite/csv.hpp"
#include "rootcite/cssci.hpp"
#include "rootcite/errors.hpp"
#include "rootcite/spectroscopy.hpp"
#include "rootcite/store.hpp"
#include "rootcite/svg.hpp"
#include "rootcite/wos.hpp"

namespace rootcite {

namespace fs = std::filesystem;

namespace {

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    if (fs::exists(dir, ec) && !fs::is_directory(dir, ec))
        throw PathIsFileError("not a directory: " + dir.string());
    fs::create_directories(dir, ec);
    if (ec) {
        if (ec == std::errc::permission_denied)
            throw PermissionDeniedError("cannot create " + dir.string());
        throw Error("cannot create " + dir.string() + ": " + ec.message());
    }
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw PermissionDeniedError("cannot write " + path.string());
    return out;
}

}  // namespace

ProjectLayout create_project(const fs::path& root) {
    ProjectLayout layout{root};
    ensure_directory(root);
    ensure_directory(layout.data_dir(SourceFormat::Cssci));
    ensure_directory(layout.data_dir(SourceFormat::Wos));
    ensure_directory(layout.out_dir());
    return layout;
}

ProjectLayout open_project(const fs::path& root) {
    ProjectLayout layout{root};
    for (const fs::path& dir : {layout.data_dir(SourceFormat::Cssci),
                                layout.data_dir(SourceFormat::Wos), layout.out_dir()}) {
        std::error_code ec;
        if (!fs::is_directory(dir, ec))
            throw MissingLayoutError("missing " + dir.string() + " (run create first)");
    }
    return layout;
}

IngestSummary ingest_inputs(const ProjectLayout& layout, SourceFormat format,
                            std::ostream& diagnostics) {
    fs::path dir = layout.data_dir(format);
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw MissingLayoutError("missing " + dir.string() + " (run create first)");

    std::vector<fs::path> inputs;
    for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string name = entry.path().filename().string();
        if (!name.empty() && name.front() == '.') continue;
        inputs.push_back(entry.path());
    }
    std::sort(inputs.begin(), inputs.end());
    if (inputs.empty()) throw NoInputFilesError("no input files in " + dir.string());

    IngestSummary summary;
    std::vector<SourceRecord> all_records;
    ParseDiagnostics all_diags;
    for (const fs::path& path : inputs) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw PermissionDeniedError("cannot read " + path.string());
        ParseResult parsed = format == SourceFormat::Cssci
                                 ? parse_cssci(in, path.filename().string())
                                 : parse_wos(in, path.filename().string());
        for (SourceRecord& rec : parsed.records) all_records.push_back(std::move(rec));
        all_diags.merge(parsed.diagnostics);
    }

    for (const ParseDiagnostics::Skip& skip : all_diags.skipped)
        diagnostics << "SKIP " << skip.file << ":" << skip.line << " " << skip.reason
                    << "\n";
    if (all_diags.missing_year > 0)
        diagnostics << "note: " << all_diags.missing_year
                    << " record(s) without a publication year\n";

    append_records(layout.store_path(), all_records);

    summary.records = all_records.size();
    for (const SourceRecord& rec : all_records) summary.references += rec.references.size();
    summary.skipped = all_diags.skipped.size();
    return summary;
}

std::vector<SourceRunSummary> run_analysis(const ProjectLayout& layout,
                                           const RunOptions& options, std::ostream& log) {
    std::vector<SourceRecord> records = load_records(layout.store_path());

    std::vector<SourceRunSummary> summaries;
    for (SourceFormat format : {SourceFormat::Cssci, SourceFormat::Wos}) {
        std::vector<const SourceRecord*> source_records;
        for (const SourceRecord& rec : records)
            if (rec.source_format == format) source_records.push_back(&rec);
        if (source_records.empty()) continue;

        std::string source(source_format_code(format));

        std::vector<CitedReference> refs;
        for (const SourceRecord* rec : source_records)
            refs.insert(refs.end(), rec->references.begin(), rec->references.end());
        if (refs.empty()) {
            log << "skip " << source << ": records carry no references\n";
            continue;
        }

        std::vector<ReferenceCluster> clusters = cluster_references(refs, options.cluster);

        std::optional<int> min_rpy, max_rpy;
        for (const ReferenceCluster& cluster : clusters) {
            if (!cluster.rpy) continue;
            if (!min_rpy || *cluster.rpy < *min_rpy) min_rpy = cluster.rpy;
            if (!max_rpy || *cluster.rpy > *max_rpy) max_rpy = cluster.rpy;
        }
        if (!min_rpy && !(options.from_year && options.to_year)) {
            log << "skip " << source << ": no reference carries a publication year\n";
            continue;
        }

        std::optional<int> max_citing_year;
        for (const SourceRecord* rec : source_records)
            if (rec->pub_year && (!max_citing_year || *rec->pub_year > *max_citing_year))
                max_citing_year = rec->pub_year;

        int from = options.from_year ? *options.from_year : *min_rpy;
        int to;
        if (options.to_year) {
            to = *options.to_year;
        } else {
            to = max_citing_year ? *max_citing_year : *max_rpy;
            if (to < from) to = *max_rpy;  // in-press years can outrun citing years
        }

        RpyCountResult counted = rpy_counts(clusters, from, to);
        std::vector<SpectroscopyRow> rows = median_deviation(std::move(counted.rows));
        std::vector<int> peak_years = find_peaks(rows, options.min_dev);

        std::size_t top_k =
            options.top_k == 0 ? std::numeric_limits<std::size_t>::max() : options.top_k;
        std::vector<PeakReport> reports;
        reports.reserve(peak_years.size());
        for (int year : peak_years) reports.push_back(year_report(clusters, year, top_k));

        SourceRunSummary summary;
        summary.format = format;
        summary.peak_years = peak_years;
        summary.excluded_no_year = counted.excluded_no_year;
        summary.excluded_out_of_range = counted.excluded_out_of_range;
        summary.median_csv = layout.out_dir() / ("median_" + source + ".csv");
        summary.result_csv = layout.out_dir() / ("result_" + source + ".csv");
        summary.spectrum_svg = layout.out_dir() / ("spectrum_" + source + ".svg");

        {
            std::ofstream out = open_output(summary.median_csv);
            write_median_csv(out, rows);
        }
        {
            std::ofstream out = open_output(summary.result_csv);
            write_result_csv(out, reports);
        }
        {
            std::ofstream out = open_output(summary.spectrum_svg);
            write_spectrum_svg(out, rows, source);
        }

        log << "peaks " << source << ":";
        if (peak_years.empty()) {
            log << " (none)";
        } else {
            for (int year : peak_years) log << ' ' << year;
        }
        log << "\n";
        if (summary.excluded_no_year > 0)
            log << "note: " << summary.excluded_no_year << " " << source
                << " occurrence(s) without a reference year\n";
        if (summary.excluded_out_of_range > 0)
            log << "note: " << summary.excluded_out_of_range << " " << source
                << " occurrence(s) outside [" << from << ", " << to << "]\n";

        summaries.push_back(std::move(summary));
    }
    return summaries;
}

}  // namespace rootcite
