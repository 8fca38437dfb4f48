// Acceptance checks for the whole pipeline. Each criterion prints exactly one
// PASS/FAIL line; the exit code is the number of failures.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus_gen.hpp"
#include "oracles.hpp"
#include "rootcite/cluster.hpp"
#include "rootcite/cssci.hpp"
#include "rootcite/minhash.hpp"
#include "rootcite/peaks.hpp"
#include "rootcite/spectroscopy.hpp"
#include "rootcite/store.hpp"

using namespace rootcite;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (detail.empty()) detail = why;
    }
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args) {
    std::string cmd =
        std::string("\"") + ROOTCITE_CLI_PATH + "\" " + args + " > /dev/null 2> /dev/null";
    int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

std::vector<SpectroscopyRow> rows_from_counts(const std::vector<std::int64_t>& counts,
                                              int first_year) {
    std::vector<SpectroscopyRow> rows(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        rows[i].rpy = first_year + static_cast<int>(i);
        rows[i].count = counts[i];
    }
    return rows;
}

std::vector<std::int64_t> devs_of(const std::vector<SpectroscopyRow>& rows) {
    std::vector<std::int64_t> devs(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) devs[i] = rows[i].median_dev;
    return devs;
}

// ---- criterion 1: bundled golden sample -----------------------------------

Outcome golden_sample_parse() {
    Outcome out;
    fs::path path = fs::path(ROOTCITE_TEST_DATA_DIR) / "cssci_golden.txt";
    std::string text = read_file(path);
    if (text.empty()) {
        out.fail("fixture missing: " + path.string());
        return out;
    }

    ParseResult parsed = parse_cssci_text(text, "cssci_golden.txt");
    if (parsed.records.size() != 1)
        out.fail("expected 1 record, got " + std::to_string(parsed.records.size()));
    if (out.ok) {
        const SourceRecord& rec = parsed.records[0];
        if (!rec.pub_year || *rec.pub_year != 1998) out.fail("pub_year != 1998");
        if (rec.references.size() != 15)
            out.fail("expected 15 references, got " +
                     std::to_string(rec.references.size()));
        std::size_t chinese = 0, english = 0;
        for (const CitedReference& ref : rec.references)
            (ref.language == Language::Chinese ? chinese : english) += 1;
        if (chinese != 10 || english != 5)
            out.fail("language split " + std::to_string(chinese) + " zh / " +
                     std::to_string(english) + " en, expected 10/5");
    }

    // byte-identical store output across parses
    ParseResult again = parse_cssci_text(text, "cssci_golden.txt");
    std::ostringstream store_a, store_b;
    append_records(store_a, parsed.records);
    append_records(store_b, again.records);
    if (store_a.str().empty() || store_a.str() != store_b.str())
        out.fail("store bytes differ between runs");
    return out;
}

// ---- criterion 2: corpus statistics identities -----------------------------

Outcome corpus_identities(double* worst_seconds) {
    Outcome out;
    *worst_seconds = 0.0;
    for (int i = 0; i < 10 && out.ok; ++i) {
        auto started = std::chrono::steady_clock::now();
        std::size_t n_records = 100 * static_cast<std::size_t>(i + 1);
        synth::Corpus corpus = synth::make_cssci_corpus(static_cast<std::uint64_t>(i + 1),
                                                        n_records);
        ParseResult parsed = parse_cssci_text(corpus.cssci_text, "synthetic.txt");

        std::vector<CitedReference> refs;
        for (const SourceRecord& rec : parsed.records)
            refs.insert(refs.end(), rec.references.begin(), rec.references.end());
        std::vector<ReferenceCluster> clusters = cluster_references(refs);
        CorpusStats stats = corpus_stats(parsed.records, clusters);

        std::string tag = "corpus " + std::to_string(i + 1) + ": ";
        if (stats.n_publications != corpus.n_records)
            out.fail(tag + "publication count mismatch");
        if (stats.n_references_total != static_cast<std::int64_t>(corpus.n_refs))
            out.fail(tag + "reference total mismatch");
        if (stats.n_references_chinese + stats.n_references_english !=
            stats.n_references_total)
            out.fail(tag + "language totals do not sum");
        if (stats.n_references_chinese != corpus.refs_chinese ||
            stats.n_references_english != corpus.refs_english)
            out.fail(tag + "language totals differ from ground truth");

        // the average is exact: avg * n_publications == n_references_total
        Fraction lhs = stats.avg_refs_per_paper *
                       Fraction(static_cast<long long>(stats.n_publications), 1);
        if (lhs != Fraction(stats.n_references_total, 1))
            out.fail(tag + "avg_refs_per_paper identity broken");

        // per-year tallies from the raw records must match what was written
        std::map<int, long long> tally;
        for (const SourceRecord& rec : parsed.records)
            for (const CitedReference& ref : rec.references)
                if (ref.ref_year) ++tally[*ref.ref_year];
        if (tally != corpus.year_tally) out.fail(tag + "per-year tally mismatch");

        std::size_t papers = 0;
        for (const auto& [year, ys] : stats.per_citing_year) papers += ys.n_papers;
        if (papers != stats.n_publications)
            out.fail(tag + "per-citing-year paper counts do not sum");

        for (const auto& [year, fractions] : stats.per_rpy_language)
            if (fractions.first + fractions.second != Fraction(1, 1))
                out.fail(tag + "language shares of " + std::to_string(year) +
                         " do not sum to 1");

        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                       started)
                             .count();
        if (seconds > *worst_seconds) *worst_seconds = seconds;
    }
    if (out.ok && *worst_seconds >= 5.0) out.fail("a corpus exceeded the 5 s budget");
    return out;
}

// ---- criterion 3: minhash estimator accuracy -------------------------------

Outcome estimator_accuracy() {
    Outcome out;
    std::mt19937_64 rng(303);
    MinHashFamily family(kDefaultSeed);
    std::size_t within = 0;
    const std::size_t n_pairs = 1000;
    std::size_t token_counter = 0;

    auto fresh_token = [&token_counter]() {
        return "tok" + std::to_string(token_counter++);
    };

    for (std::size_t t = 0; t < n_pairs; ++t) {
        std::size_t shared = std::uniform_int_distribution<std::size_t>(0, 40)(rng);
        std::size_t only_a = std::uniform_int_distribution<std::size_t>(0, 30)(rng);
        std::size_t only_b = std::uniform_int_distribution<std::size_t>(0, 30)(rng);
        while (shared + only_a < 20) ++only_a;  // both sets need >= 20 shingles
        while (shared + only_b < 20) ++only_b;

        std::vector<std::string> a, b;
        for (std::size_t s = 0; s < shared; ++s) {
            std::string tok = fresh_token();
            a.push_back(tok);
            b.push_back(tok);
        }
        for (std::size_t s = 0; s < only_a; ++s) a.push_back(fresh_token());
        for (std::size_t s = 0; s < only_b; ++s) b.push_back(fresh_token());

        double exact = oracle::jaccard(std::set<std::string>(a.begin(), a.end()),
                                       std::set<std::string>(b.begin(), b.end()));
        double estimate = estimate_similarity(family.signature(a), family.signature(b));
        if (std::abs(estimate - exact) <= 0.13) ++within;
    }

    if (within < 990)
        out.fail(std::to_string(within) + "/1000 within 0.13, need >= 990");
    else
        out.detail = std::to_string(within) + "/1000 within 0.13";
    return out;
}

// ---- criterion 4: dedup mode agreement -------------------------------------

std::vector<std::size_t> assignment_of(const std::vector<ReferenceCluster>& clusters,
                                       std::size_t n_refs, bool* valid) {
    // every occurrence is identified by (citing record, ordinal): 15 per record
    std::vector<std::size_t> assign(n_refs, SIZE_MAX);
    std::size_t placed = 0;
    for (const ReferenceCluster& cluster : clusters) {
        if (cluster.members.empty() ||
            cluster.count != static_cast<std::int64_t>(cluster.members.size())) {
            *valid = false;
            return assign;
        }
        for (const CitedReference& member : cluster.members) {
            std::size_t record =
                std::stoul(member.citing_record_id.substr(member.citing_record_id.find('#') + 1));
            std::size_t index = (record - 1) * 15 + (member.ordinal - 1);
            if (index >= n_refs || assign[index] != SIZE_MAX) {
                *valid = false;
                return assign;
            }
            assign[index] = cluster.cluster_id;
            ++placed;
        }
    }
    *valid = placed == n_refs;
    return assign;
}

Outcome dedup_agreement() {
    Outcome out;
    const std::size_t n_refs = 300;
    std::vector<CitedReference> refs = synth::make_variant_refs(4242, n_refs);

    ClusterOptions exact_options;
    exact_options.mode = DedupMode::ExactJaccard;
    exact_options.threshold = 0.85;
    bool valid = false;
    std::vector<std::size_t> baseline =
        assignment_of(cluster_references(refs, exact_options), n_refs, &valid);
    if (!valid) {
        out.fail("exact-jaccard run is not a partition");
        return out;
    }

    double worst = 1.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        ClusterOptions options;  // minhash mode, threshold 0.85
        options.seed = seed;
        std::vector<std::size_t> assign =
            assignment_of(cluster_references(refs, options), n_refs, &valid);
        if (!valid) {
            out.fail("minhash seed " + std::to_string(seed) + " is not a partition");
            return out;
        }

        std::size_t agree = 0, total = 0;
        for (std::size_t i = 0; i < n_refs; ++i)
            for (std::size_t j = i + 1; j < n_refs; ++j) {
                ++total;
                if ((baseline[i] == baseline[j]) == (assign[i] == assign[j])) ++agree;
            }
        double ratio = static_cast<double>(agree) / static_cast<double>(total);
        if (ratio < worst) worst = ratio;
        if (ratio < 0.95)
            out.fail("seed " + std::to_string(seed) + " pair agreement " +
                     std::to_string(ratio) + " < 0.95");
    }
    if (out.ok) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "worst pair agreement %.4f", worst);
        out.detail = buf;
    }
    return out;
}

// ---- criterion 5: median deviation oracle ----------------------------------

Outcome median_oracle() {
    Outcome out;
    std::mt19937_64 rng(515);
    std::uniform_int_distribution<std::int64_t> dist(0, 100);
    for (int series = 0; series < 100 && out.ok; ++series) {
        std::vector<std::int64_t> counts(50);
        for (auto& c : counts) c = dist(rng);
        auto rows = median_deviation(rows_from_counts(counts, 1900));
        std::vector<std::int64_t> expected =
            oracle::median_devs(counts);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].median_dev != expected[i]) {
                out.fail("series " + std::to_string(series) + " year " +
                         std::to_string(rows[i].rpy) + ": " +
                         std::to_string(rows[i].median_dev) + " != " +
                         std::to_string(expected[i]));
                break;
            }
    }
    return out;
}

// ---- criterion 6: deviation shift invariance -------------------------------

Outcome shift_invariance() {
    Outcome out;
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<std::int64_t> dist(0, 50);

    std::vector<std::vector<std::int64_t>> fixtures;
    for (int f = 0; f < 5; ++f) {
        std::vector<std::int64_t> counts(40);
        for (auto& c : counts) c = dist(rng);
        fixtures.push_back(std::move(counts));
    }
    std::vector<std::int64_t> spikes(41, 0);
    spikes[10] = 9;
    spikes[20] = 7;
    spikes[30] = 5;
    fixtures.push_back(std::move(spikes));

    for (const auto& counts : fixtures) {
        auto rows = median_deviation(rows_from_counts(counts, 1940));
        for (std::int64_t c : {std::int64_t{1}, std::int64_t{10}, std::int64_t{1000}}) {
            std::vector<std::int64_t> shifted = counts;
            for (auto& v : shifted) v += c;
            auto shifted_rows = median_deviation(rows_from_counts(shifted, 1940));
            if (devs_of(shifted_rows) != devs_of(rows)) {
                out.fail("median_dev changed under shift +" + std::to_string(c));
                return out;
            }
            for (std::int64_t min_dev : {1, 5})
                if (find_peaks(shifted_rows, min_dev) != find_peaks(rows, min_dev)) {
                    out.fail("peaks changed under shift +" + std::to_string(c));
                    return out;
                }
        }
    }
    return out;
}

// ---- criterion 7: isolated spike detection ---------------------------------

Outcome spike_detection() {
    Outcome out;
    std::vector<std::int64_t> counts(51, 0);  // years 1940..1990
    counts[10] = 9;                           // 1950
    counts[20] = 7;                           // 1960
    counts[30] = 5;                           // 1970
    auto rows = median_deviation(rows_from_counts(counts, 1940));

    std::vector<int> at5 = find_peaks(rows, 5);
    if (at5 != std::vector<int>{1950, 1960, 1970})
        out.fail("min_dev 5 did not return exactly the three spike years");
    std::vector<int> at8 = find_peaks(rows, 8);
    if (at8 != std::vector<int>{1950}) out.fail("min_dev 8 did not return exactly 1950");

    // same answer as the exhaustive predicate scan
    std::vector<int> years(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) years[i] = rows[i].rpy;
    if (at5 != oracle::peak_years(years, devs_of(rows), 5) ||
        at8 != oracle::peak_years(years, devs_of(rows), 8))
        out.fail("disagrees with the exhaustive scan");
    return out;
}

// ---- criterion 8: end-to-end determinism -----------------------------------

Outcome end_to_end(double* seconds) {
    Outcome out;
    auto started = std::chrono::steady_clock::now();

    synth::Corpus corpus = synth::make_cssci_corpus(2026, 5000);
    fs::path base = fs::temp_directory_path() /
                    ("rootcite_accept_" + std::to_string(::getpid()));
    std::error_code ec;
    fs::remove_all(base, ec);

    std::vector<fs::path> outputs[2];
    for (int pass = 0; pass < 2 && out.ok; ++pass) {
        fs::path root = base / ("run_" + std::to_string(pass));
        if (run_cli("create \"" + root.string() + "\"") != 0) {
            out.fail("create failed");
            break;
        }
        std::ofstream data(root / "data_cssci" / "corpus.txt", std::ios::binary);
        data << corpus.cssci_text;
        data.close();
        if (run_cli("ingest --format cssci \"" + root.string() + "\"") != 0) {
            out.fail("ingest failed");
            break;
        }
        if (run_cli("run --seed 42 --min-dev 5 \"" + root.string() + "\"") != 0) {
            out.fail("run failed");
            break;
        }
        for (const char* name :
             {"median_cssci.csv", "result_cssci.csv", "spectrum_cssci.svg"})
            outputs[pass].push_back(root / "out" / name);
    }

    if (out.ok) {
        for (std::size_t i = 0; i < outputs[0].size(); ++i) {
            std::string first = read_file(outputs[0][i]);
            std::string second = read_file(outputs[1][i]);
            if (first.empty())
                out.fail("missing output " + outputs[0][i].filename().string());
            else if (first != second)
                out.fail(outputs[0][i].filename().string() + " differs between runs");
        }
    }

    fs::remove_all(base, ec);
    *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                   .count();
    return out;
}

// ---- harness ----------------------------------------------------------------

int report(int index, const char* name, double budget_seconds,
           const std::function<Outcome(double*)>& criterion) {
    double elapsed = -1.0;
    Outcome out = criterion(&elapsed);
    double measured = elapsed;
    if (out.ok && budget_seconds > 0 && measured >= budget_seconds)
        out.fail("exceeded time budget");

    char timing[64] = "";
    if (budget_seconds > 0)
        std::snprintf(timing, sizeof timing, " [%.2fs < %.0fs]", measured, budget_seconds);
    std::printf("%s %d/8 %s%s%s%s\n", out.ok ? "PASS" : "FAIL", index, name, timing,
                out.detail.empty() ? "" : " — ", out.detail.c_str());
    std::fflush(stdout);
    return out.ok ? 0 : 1;
}

int timed(int index, const char* name, double budget_seconds,
          const std::function<Outcome()>& criterion) {
    return report(index, name, budget_seconds, [&](double* seconds) {
        auto started = std::chrono::steady_clock::now();
        Outcome out = criterion();
        *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                       .count();
        return out;
    });
}

}  // namespace

int main() {
    int failures = 0;
    failures += timed(1, "golden sample parse", 1.0, golden_sample_parse);
    failures += report(2, "corpus statistics identities", 5.0, [](double* seconds) {
        return corpus_identities(seconds);  // budget applies per corpus
    });
    failures += timed(3, "minhash estimator accuracy", 10.0, estimator_accuracy);
    failures += timed(4, "dedup mode agreement", 10.0, dedup_agreement);
    failures += timed(5, "median deviation oracle", 1.0, median_oracle);
    failures += timed(6, "deviation shift invariance", 0.0, shift_invariance);
    failures += timed(7, "isolated spike detection", 0.0, spike_detection);
    failures += report(8, "end-to-end determinism", 30.0, end_to_end);

    std::printf("acceptance: %d/8 passed\n", 8 - failures);
    return failures;
}
