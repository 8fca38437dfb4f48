#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include "rootcite/cluster.hpp"
#include "rootcite/peaks.hpp"
#include "rootcite/record.hpp"

namespace rootcite {

struct ProjectLayout {
    std::filesystem::path root;

    std::filesystem::path data_dir(SourceFormat format) const {
        return root / (format == SourceFormat::Cssci ? "data_cssci" : "data_wos");
    }
    std::filesystem::path out_dir() const { return root / "out"; }
    std::filesystem::path store_path() const { return root / "store.jsonl"; }
};

/// Create the project skeleton (data_cssci/, data_wos/, out/). Idempotent.
/// Throws PathIsFileError when root or a subdirectory exists as a regular
/// file, PermissionDeniedError when creation is not allowed.
ProjectLayout create_project(const std::filesystem::path& root);

/// Open an existing layout, failing fast when the skeleton is absent.
/// Throws MissingLayoutError.
ProjectLayout open_project(const std::filesystem::path& root);

struct IngestSummary {
    std::size_t records = 0;
    std::size_t references = 0;
    std::size_t skipped = 0;
};

/// Parse every input file for the format (sorted by name, dotfiles ignored)
/// and append the records to the store. Nonfatal parse skips go to
/// `diagnostics` one line each. Throws NoInputFilesError when the data
/// directory holds no files.
IngestSummary ingest_inputs(const ProjectLayout& layout, SourceFormat format,
                            std::ostream& diagnostics);

struct RunOptions {
    ClusterOptions cluster;
    std::optional<int> from_year;  // default: smallest observed reference year
    std::optional<int> to_year;    // default: largest citing year
    std::int64_t min_dev = kDefaultMinDev;
    std::size_t top_k = 0;  // 0 = keep every entry
};

struct SourceRunSummary {
    SourceFormat format = SourceFormat::Cssci;
    std::vector<int> peak_years;
    std::int64_t excluded_no_year = 0;
    std::int64_t excluded_out_of_range = 0;
    std::filesystem::path median_csv;
    std::filesystem::path result_csv;
    std::filesystem::path spectrum_svg;
};

/// Dedup → spectroscopy → peak scan per source format present in the store;
/// writes median_<source>.csv, result_<source>.csv (ranked entries for the
/// peak years), and spectrum_<source>.svg into out/. Progress and peak lists
/// go to `log`. Throws EmptyStoreError when nothing has been ingested.
std::vector<SourceRunSummary> run_analysis(const ProjectLayout& layout,
                                           const RunOptions& options, std::ostream& log);

}  // namespace rootcite
