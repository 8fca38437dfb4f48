#include <cstdint>
#include <iostream>
#include <limits>
#include <string>

#include "CLI11.hpp"
#include "rootcite/cluster.hpp"
#include "rootcite/errors.hpp"
#include "rootcite/project.hpp"

namespace {

int run_cli(int argc, char** argv) {
    CLI::App app{"rootcite — reference publication year spectroscopy over CSSCI and WoS "
                 "exports"};
    app.require_subcommand(1);

    std::string create_dir;
    CLI::App* create = app.add_subcommand("create", "create the project skeleton");
    create->add_option("dir", create_dir, "project directory")->required();

    std::string ingest_dir;
    std::string format_name;
    CLI::App* ingest =
        app.add_subcommand("ingest", "parse input files and append them to the store");
    ingest->add_option("dir", ingest_dir, "project directory")->required();
    ingest->add_option("--format", format_name, "input format")
        ->required()
        ->check(CLI::IsMember({"cssci", "wos"}));

    std::string run_dir;
    std::string mode_name = "minhash";
    double threshold = rootcite::kDefaultThreshold;
    std::uint64_t seed = rootcite::kDefaultSeed;
    int from_year = 0;
    int to_year = 0;
    std::int64_t min_dev = rootcite::kDefaultMinDev;
    std::size_t top_k = 0;
    CLI::App* run = app.add_subcommand("run", "deduplicate, compute the spectrum, report "
                                              "peak years");
    run->add_option("dir", run_dir, "project directory")->required();
    run->add_option("--dedup-mode", mode_name, "similarity mode")
        ->check(CLI::IsMember({"minhash", "jaccard", "levenshtein"}));
    CLI::Option* threshold_opt =
        run->add_option("--threshold", threshold,
                        "similarity threshold in (0,1]; levenshtein defaults to 0.75")
            ->check([](const std::string& value) -> std::string {
                double v = 0.0;
                try {
                    v = std::stod(value);
                } catch (...) {
                    return "not a number";
                }
                if (v <= 0.0 || v > 1.0) return "threshold must be in (0,1]";
                return {};
            });
    run->add_option("--seed", seed, "hash seed for minhash mode");
    CLI::Option* from_opt = run->add_option("--from", from_year, "first year of the range");
    CLI::Option* to_opt = run->add_option("--to", to_year, "last year of the range");
    run->add_option("--min-dev", min_dev, "peak threshold on the median deviation")
        ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
    run->add_option("--top-k", top_k, "entries per peak year in the result file (0 = all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (create->parsed()) {
            rootcite::ProjectLayout layout = rootcite::create_project(create_dir);
            std::cout << "project ready at " << layout.root.string() << "\n";
            return 0;
        }
        if (ingest->parsed()) {
            rootcite::ProjectLayout layout = rootcite::open_project(ingest_dir);
            rootcite::SourceFormat format = format_name == "cssci"
                                                ? rootcite::SourceFormat::Cssci
                                                : rootcite::SourceFormat::Wos;
            rootcite::IngestSummary summary =
                rootcite::ingest_inputs(layout, format, std::cerr);
            std::cout << "records=" << summary.records << " refs=" << summary.references
                      << " skipped=" << summary.skipped << "\n";
            return 0;
        }
        // run
        rootcite::ProjectLayout layout = rootcite::open_project(run_dir);
        rootcite::RunOptions options;
        options.cluster.mode = *rootcite::dedup_mode_from_name(mode_name);
        options.cluster.seed = seed;
        if (threshold_opt->count() > 0)
            options.cluster.threshold = threshold;
        else if (options.cluster.mode == rootcite::DedupMode::Levenshtein)
            options.cluster.threshold = rootcite::kDefaultLevenshteinThreshold;
        if (from_opt->count() > 0) options.from_year = from_year;
        if (to_opt->count() > 0) options.to_year = to_year;
        if (options.from_year && options.to_year && *options.from_year > *options.to_year) {
            std::cerr << "error: --from exceeds --to\n";
            return 1;
        }
        options.min_dev = min_dev;
        options.top_k = top_k;
        rootcite::run_analysis(layout, options, std::cout);
        return 0;
    } catch (const rootcite::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
