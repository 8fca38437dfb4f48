#pragma once

// Naive second implementations used only to check the real ones. Keep these
// boring and obviously correct; they trade speed for transparency.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Median as "sort, take the middle; for even sizes take the lower of the two
// middle elements".
inline std::int64_t lower_median(std::vector<std::int64_t> window) {
    std::sort(window.begin(), window.end());
    std::size_t n = window.size();
    if (n % 2 == 1) return window[n / 2];
    return window[n / 2 - 1];
}

inline std::vector<std::int64_t> median_devs(const std::vector<std::int64_t>& counts) {
    std::vector<std::int64_t> devs(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        std::vector<std::int64_t> window;
        std::size_t lo = i < 2 ? 0 : i - 2;
        std::size_t hi = std::min(i + 2, counts.size() - 1);
        for (std::size_t j = lo; j <= hi; ++j) window.push_back(counts[j]);
        devs[i] = counts[i] - lower_median(std::move(window));
    }
    return devs;
}

inline double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 1.0;
    std::size_t inter = 0;
    for (const std::string& s : a) inter += b.count(s);
    return static_cast<double>(inter) /
           static_cast<double>(a.size() + b.size() - inter);
}

// Exhaustive scan of the peak predicate at every position.
inline std::vector<int> peak_years(const std::vector<int>& years,
                                   const std::vector<std::int64_t>& devs, std::int64_t min_dev) {
    std::vector<int> out;
    for (std::size_t i = 0; i < devs.size(); ++i) {
        if (devs[i] < min_dev) continue;
        bool rises_from_left = i == 0 || devs[i] > devs[i - 1];
        bool holds_to_right = i + 1 == devs.size() || devs[i] >= devs[i + 1];
        if (rises_from_left && holds_to_right) out.push_back(years[i]);
    }
    return out;
}

}  // namespace oracle
