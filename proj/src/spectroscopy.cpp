#include "rootcite/spectroscopy.hpp"

#include <algorithm>
#include <numeric>

#include "rootcite/errors.hpp"

namespace rootcite {

Fraction::Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction(a.num * b.den + b.num * a.den, a.den * b.den);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num * b.num, a.den * b.den);
}

RpyCountResult rpy_counts(const std::vector<ReferenceCluster>& clusters, int range_start,
                          int range_end) {
    if (range_start > range_end)
        throw InvertedRangeError("rpy_counts: range start exceeds end");

    RpyCountResult result;
    result.rows.resize(static_cast<std::size_t>(range_end - range_start) + 1);
    for (std::size_t i = 0; i < result.rows.size(); ++i)
        result.rows[i].rpy = range_start + static_cast<int>(i);

    for (const ReferenceCluster& cluster : clusters) {
        if (!cluster.rpy) {
            result.excluded_no_year += cluster.count;
            continue;
        }
        int year = *cluster.rpy;
        if (year < range_start || year > range_end) {
            result.excluded_out_of_range += cluster.count;
            continue;
        }
        result.rows[static_cast<std::size_t>(year - range_start)].count += cluster.count;
    }
    return result;
}

std::vector<SpectroscopyRow> median_deviation(std::vector<SpectroscopyRow> rows) {
    if (rows.empty()) throw EmptyInputError("median_deviation: no rows");

    std::vector<std::int64_t> devs(rows.size());
    std::int64_t window[5];
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t lo = i >= 2 ? i - 2 : 0;
        std::size_t hi = std::min(i + 2, rows.size() - 1);
        std::size_t n = 0;
        for (std::size_t j = lo; j <= hi; ++j) window[n++] = rows[j].count;
        std::sort(window, window + n);
        devs[i] = rows[i].count - window[(n - 1) / 2];  // lower middle when even
    }
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].median_dev = devs[i];
    return rows;
}

CorpusStats corpus_stats(const std::vector<SourceRecord>& records,
                         const std::vector<ReferenceCluster>& clusters) {
    if (records.empty()) throw EmptyInputError("corpus_stats: no records");

    CorpusStats stats;
    stats.n_publications = static_cast<std::int64_t>(records.size());

    bool have_pub_year = false;
    for (const SourceRecord& rec : records) {
        stats.n_references_total += static_cast<std::int64_t>(rec.references.size());
        std::int64_t chinese = 0;
        for (const CitedReference& ref : rec.references)
            if (ref.language == Language::Chinese) ++chinese;
        std::int64_t english = static_cast<std::int64_t>(rec.references.size()) - chinese;
        stats.n_references_chinese += chinese;
        stats.n_references_english += english;

        if (rec.pub_year) {
            int y = *rec.pub_year;
            if (!have_pub_year) {
                stats.pub_year_range = {y, y};
                have_pub_year = true;
            } else {
                stats.pub_year_range.first = std::min(stats.pub_year_range.first, y);
                stats.pub_year_range.second = std::max(stats.pub_year_range.second, y);
            }
            CitingYearStats& cy = stats.per_citing_year[y];
            ++cy.n_papers;
            cy.refs_chinese += chinese;
            cy.refs_english += english;
        }
    }
    stats.avg_refs_per_paper = Fraction(stats.n_references_total, stats.n_publications);

    std::map<int, std::pair<std::int64_t, std::int64_t>> rpy_tallies;  // (zh, en)
    bool have_rpy = false;
    for (const ReferenceCluster& cluster : clusters) {
        if (!cluster.rpy) continue;
        int y = *cluster.rpy;
        if (!have_rpy) {
            stats.rpy_range = {y, y};
            have_rpy = true;
        } else {
            stats.rpy_range.first = std::min(stats.rpy_range.first, y);
            stats.rpy_range.second = std::max(stats.rpy_range.second, y);
        }
        auto& [zh, en] = rpy_tallies[y];
        for (const CitedReference& member : cluster.members) {
            if (member.language == Language::Chinese)
                ++zh;
            else
                ++en;
        }
    }
    for (const auto& [year, tally] : rpy_tallies) {
        std::int64_t total = tally.first + tally.second;
        stats.per_rpy_language.emplace(
            year, std::make_pair(Fraction(tally.first, total), Fraction(tally.second, total)));
    }
    return stats;
}

}  // namespace rootcite
