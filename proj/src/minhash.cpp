#include "rootcite/minhash.hpp"

#include <limits>
#include <random>

#include "rootcite/errors.hpp"

namespace rootcite {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

// splitmix64 finalizer; full avalanche over 64 bits.
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

}  // namespace

MinHashFamily::MinHashFamily(std::uint64_t seed) : seed_(seed), salts_(kSignatureLength) {
    std::mt19937_64 rng(seed);
    for (auto& salt : salts_) salt = rng();
}

MinHashSignature MinHashFamily::signature(const std::vector<std::string>& shingles) const {
    if (shingles.empty()) throw EmptyShingleSetError();
    std::vector<std::uint64_t> base;
    base.reserve(shingles.size());
    for (const auto& s : shingles) base.push_back(fnv1a64(s));

    MinHashSignature sig;
    sig.seed = seed_;
    sig.values.assign(kSignatureLength, std::numeric_limits<std::uint64_t>::max());
    for (std::size_t i = 0; i < kSignatureLength; ++i) {
        const std::uint64_t salt = salts_[i];
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        for (std::uint64_t b : base) {
            const std::uint64_t h = mix64(b ^ salt);
            if (h < best) best = h;
        }
        sig.values[i] = best;
    }
    return sig;
}

MinHashSignature minhash_signature(const std::vector<std::string>& shingles, std::uint64_t seed) {
    return MinHashFamily(seed).signature(shingles);
}

double estimate_similarity(const MinHashSignature& a, const MinHashSignature& b) {
    if (a.values.size() != b.values.size()) {
        throw SignatureMismatchError("signature lengths differ");
    }
    if (a.seed != b.seed) {
        throw SignatureMismatchError("signature seeds differ");
    }
    if (a.values.empty()) throw SignatureMismatchError("empty signatures");
    std::size_t matches = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i] == b.values[i]) ++matches;
    }
    return static_cast<double>(matches) / static_cast<double>(a.values.size());
}

double exact_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.empty() && b.empty()) return 1.0;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t shared = 0;
    while (i < a.size() && j < b.size()) {
        const int cmp = a[i].compare(b[j]);
        if (cmp == 0) {
            ++shared;
            ++i;
            ++j;
        } else if (cmp < 0) {
            ++i;
        } else {
            ++j;
        }
    }
    const std::size_t unioned = a.size() + b.size() - shared;
    return static_cast<double>(shared) / static_cast<double>(unioned);
}

}  // namespace rootcite
