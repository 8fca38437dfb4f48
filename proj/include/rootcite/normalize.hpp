#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rootcite {

/// Normalized form of a cited-reference string plus its shingle set.
/// norm: Latin lowercased, fullwidth forms mapped to ASCII, punctuation
/// replaced by single spaces, whitespace collapsed, CJK ideographs kept.
/// shingles: sorted unique character 3-grams of norm (spaces included);
/// strings shorter than 3 codepoints yield a single shingle.
struct NormalizedRef {
    std::string norm;
    std::vector<std::string> shingles;
};

/// Throws EmptyStringError when raw is empty.
NormalizedRef normalize_reference(std::string_view raw);

}  // namespace rootcite
