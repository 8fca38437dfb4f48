#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rootcite/record.hpp"

namespace rootcite {

enum class DedupMode { MinhashLsh, ExactJaccard, Levenshtein };

std::string_view dedup_mode_name(DedupMode mode);  // "minhash" / "jaccard" / "levenshtein"
std::optional<DedupMode> dedup_mode_from_name(std::string_view name);

inline constexpr double kDefaultThreshold = 0.85;
inline constexpr double kDefaultLevenshteinThreshold = 0.75;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct ClusterOptions {
    DedupMode mode = DedupMode::MinhashLsh;
    double threshold = kDefaultThreshold;
    std::uint64_t seed = kDefaultSeed;
};

/// One deduplicated reference identity: all occurrences whose pairwise
/// similarity graph is connected at the threshold.
struct ReferenceCluster {
    std::uint64_t cluster_id = 0;
    std::string canonical;                 // most frequent variant
    std::vector<CitedReference> members;   // every occurrence, input order
    std::int64_t count = 0;                // == members.size()
    std::optional<int> rpy;                // majority member year, ties to smallest
    Language language = Language::English; // language of the canonical variant
};

/// Cluster cited-reference occurrences at the similarity threshold.
/// minhash_lsh generates candidates by LSH banding (32 bands x 4 rows) and
/// confirms them with the signature estimate; exact_jaccard and levenshtein
/// compare all pairs. Clusters are connected components; output is ordered
/// by first occurrence and deterministic for fixed (input, options).
/// Throws EmptyInputError when refs is empty.
std::vector<ReferenceCluster> cluster_references(const std::vector<CitedReference>& refs,
                                                 const ClusterOptions& options = {});

}  // namespace rootcite
