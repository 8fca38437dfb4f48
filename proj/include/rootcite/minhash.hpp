#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace rootcite {

inline constexpr std::size_t kSignatureLength = 128;

/// Per-position minimum over a family of hash functions derived from the
/// seed; the fraction of agreeing positions between two signatures is an
/// unbiased estimator of the Jaccard similarity of the shingle sets.
struct MinHashSignature {
    std::vector<std::uint64_t> values;  // length kSignatureLength
    std::uint64_t seed = 0;
};

std::uint64_t fnv1a64(std::string_view bytes);

/// Hash family with deterministic per-position salts; reuse one instance
/// when signing many shingle sets under the same seed.
class MinHashFamily {
public:
    explicit MinHashFamily(std::uint64_t seed);

    /// Throws EmptyShingleSetError when shingles is empty.
    MinHashSignature signature(const std::vector<std::string>& shingles) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::vector<std::uint64_t> salts_;
};

MinHashSignature minhash_signature(const std::vector<std::string>& shingles, std::uint64_t seed);

/// Fraction of positions where the signatures agree.
/// Throws SignatureMismatchError on different length or seed.
double estimate_similarity(const MinHashSignature& a, const MinHashSignature& b);

/// Exact Jaccard similarity of two sorted unique shingle vectors.
double exact_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace rootcite
