#include "rootcite/levenshtein.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "rootcite/text.hpp"

namespace rootcite {

std::size_t levenshtein_distance(std::span<const char32_t> a, std::span<const char32_t> b) {
    if (a.size() > b.size()) std::swap(a, b);
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    if (m == 0) return n;

    std::vector<std::size_t> row(m + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t j = 1; j <= n; ++j) {
        std::size_t diagonal = row[0];
        row[0] = j;
        for (std::size_t i = 1; i <= m; ++i) {
            const std::size_t above = row[i];
            const std::size_t subst = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
            row[i] = std::min({above + 1, row[i - 1] + 1, subst});
            diagonal = above;
        }
    }
    return row[m];
}

double levenshtein_similarity(std::string_view a, std::string_view b) {
    const auto ca = utf8_codepoints(a);
    const auto cb = utf8_codepoints(b);
    const std::size_t longest = std::max(ca.size(), cb.size());
    if (longest == 0) return 1.0;
    const std::size_t dist = levenshtein_distance(ca, cb);
    return 1.0 - static_cast<double>(dist) / static_cast<double>(longest);
}

}  // namespace rootcite
