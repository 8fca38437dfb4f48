#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "rootcite/cluster.hpp"
#include "rootcite/record.hpp"

namespace rootcite {

/// Exact rational, always stored reduced with a positive denominator.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t n, std::int64_t d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

Fraction operator+(const Fraction& a, const Fraction& b);
Fraction operator*(const Fraction& a, const Fraction& b);

struct SpectroscopyRow {
    int rpy = 0;
    std::int64_t count = 0;
    std::int64_t median_dev = 0;
};

struct RpyCountResult {
    std::vector<SpectroscopyRow> rows;       // one per year in [start, end], ascending
    std::int64_t excluded_no_year = 0;       // occurrences in clusters without a year
    std::int64_t excluded_out_of_range = 0;  // occurrences whose year falls outside range
};

/// Sum cluster occurrence counts per reference publication year over
/// [range_start, range_end]; every year in the range gets a row (count 0 when
/// uncited). Throws InvertedRangeError when range_start > range_end.
RpyCountResult rpy_counts(const std::vector<ReferenceCluster>& clusters, int range_start,
                          int range_end);

/// Fill median_dev = count(y) − median of counts over the window y−2..y+2,
/// truncated at the series boundaries (sizes 3, 4, 5, …, 4, 3). The median of
/// an even-sized window is the lower middle element, keeping the deviation an
/// integer. Throws EmptyInputError.
std::vector<SpectroscopyRow> median_deviation(std::vector<SpectroscopyRow> rows);

struct CitingYearStats {
    std::int64_t refs_chinese = 0;
    std::int64_t refs_english = 0;
    std::int64_t n_papers = 0;
};

struct CorpusStats {
    std::int64_t n_publications = 0;
    std::int64_t n_references_total = 0;
    std::int64_t n_references_chinese = 0;
    std::int64_t n_references_english = 0;
    Fraction avg_refs_per_paper;
    std::pair<int, int> pub_year_range{0, 0};  // over records with a year
    std::pair<int, int> rpy_range{0, 0};       // over clusters with a year
    std::map<int, CitingYearStats> per_citing_year;
    // rpy → (fraction chinese, fraction english); exact, sums to 1 per year
    std::map<int, std::pair<Fraction, Fraction>> per_rpy_language;
};

/// Totals over raw occurrences; language shares per RPY aggregate cluster
/// members by the cluster's year. Throws EmptyInputError when records is empty.
CorpusStats corpus_stats(const std::vector<SourceRecord>& records,
                         const std::vector<ReferenceCluster>& clusters);

}  // namespace rootcite
