#include "rootcite/cluster.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "rootcite/errors.hpp"
#include "rootcite/levenshtein.hpp"
#include "rootcite/minhash.hpp"
#include "rootcite/normalize.hpp"

namespace rootcite {

namespace {

constexpr std::size_t kBands = 32;
constexpr std::size_t kRowsPerBand = 4;
static_assert(kBands * kRowsPerBand == kSignatureLength);

struct UnionFind {
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> size;

    explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];  // path halving
            x = parent[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

std::uint64_t band_digest(const std::uint64_t* rows, std::size_t count) {
    char bytes[kRowsPerBand * sizeof(std::uint64_t)];
    std::memcpy(bytes, rows, count * sizeof(std::uint64_t));
    return fnv1a64(std::string_view(bytes, count * sizeof(std::uint64_t)));
}

// Distinct normalized strings act as proxies for their occurrences: identical
// norms are similarity 1 in every mode, so occurrences can be pre-merged and
// pairwise work done once per distinct string.
struct NormGroup {
    NormalizedRef normalized;
    std::vector<std::size_t> ref_indices;  // into the input vector, ascending
};

}  // namespace

std::string_view dedup_mode_name(DedupMode mode) {
    switch (mode) {
        case DedupMode::MinhashLsh: return "minhash";
        case DedupMode::ExactJaccard: return "jaccard";
        case DedupMode::Levenshtein: return "levenshtein";
    }
    return "minhash";
}

std::optional<DedupMode> dedup_mode_from_name(std::string_view name) {
    if (name == "minhash") return DedupMode::MinhashLsh;
    if (name == "jaccard") return DedupMode::ExactJaccard;
    if (name == "levenshtein") return DedupMode::Levenshtein;
    return std::nullopt;
}

std::vector<ReferenceCluster> cluster_references(const std::vector<CitedReference>& refs,
                                                 const ClusterOptions& options) {
    if (refs.empty()) throw EmptyInputError("cluster_references: no references");

    std::vector<NormGroup> groups;
    std::vector<std::uint32_t> group_of(refs.size());
    {
        std::unordered_map<std::string, std::uint32_t> by_norm;
        by_norm.reserve(refs.size());
        for (std::size_t i = 0; i < refs.size(); ++i) {
            NormalizedRef norm = normalize_reference(refs[i].raw_string);
            auto [it, inserted] =
                by_norm.emplace(norm.norm, static_cast<std::uint32_t>(groups.size()));
            if (inserted) groups.push_back({std::move(norm), {}});
            group_of[i] = it->second;
            groups[it->second].ref_indices.push_back(i);
        }
    }

    UnionFind uf(groups.size());

    switch (options.mode) {
        case DedupMode::MinhashLsh: {
            MinHashFamily family(options.seed);
            std::vector<MinHashSignature> signatures;
            signatures.reserve(groups.size());
            for (const NormGroup& g : groups)
                signatures.push_back(family.signature(g.normalized.shingles));

            std::unordered_set<std::uint64_t> tested;
            for (std::size_t band = 0; band < kBands; ++band) {
                std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
                for (std::uint32_t g = 0; g < groups.size(); ++g) {
                    std::uint64_t key =
                        band_digest(signatures[g].values.data() + band * kRowsPerBand,
                                    kRowsPerBand);
                    buckets[key].push_back(g);
                }
                for (const auto& [key, bucket] : buckets) {
                    if (bucket.size() < 2) continue;
                    for (std::size_t a = 0; a < bucket.size(); ++a) {
                        for (std::size_t b = a + 1; b < bucket.size(); ++b) {
                            std::uint32_t ga = bucket[a];
                            std::uint32_t gb = bucket[b];
                            if (uf.find(ga) == uf.find(gb)) continue;
                            std::uint64_t pair_key =
                                (static_cast<std::uint64_t>(ga) << 32) | gb;
                            if (!tested.insert(pair_key).second) continue;
                            if (estimate_similarity(signatures[ga], signatures[gb]) >=
                                options.threshold)
                                uf.unite(ga, gb);
                        }
                    }
                }
            }
            break;
        }
        case DedupMode::ExactJaccard: {
            for (std::uint32_t a = 0; a < groups.size(); ++a) {
                for (std::uint32_t b = a + 1; b < groups.size(); ++b) {
                    if (uf.find(a) == uf.find(b)) continue;
                    if (exact_jaccard(groups[a].normalized.shingles,
                                      groups[b].normalized.shingles) >= options.threshold)
                        uf.unite(a, b);
                }
            }
            break;
        }
        case DedupMode::Levenshtein: {
            for (std::uint32_t a = 0; a < groups.size(); ++a) {
                for (std::uint32_t b = a + 1; b < groups.size(); ++b) {
                    if (uf.find(a) == uf.find(b)) continue;
                    if (levenshtein_similarity(groups[a].normalized.norm,
                                               groups[b].normalized.norm) >=
                        options.threshold)
                        uf.unite(a, b);
                }
            }
            break;
        }
    }

    // Components ordered by their earliest occurrence in the input.
    std::unordered_map<std::uint32_t, std::size_t> first_seen;
    std::vector<std::uint32_t> roots_in_order;
    for (std::size_t i = 0; i < refs.size(); ++i) {
        std::uint32_t root = uf.find(group_of[i]);
        if (first_seen.emplace(root, i).second) roots_in_order.push_back(root);
    }

    std::unordered_map<std::uint32_t, std::size_t> cluster_index;
    cluster_index.reserve(roots_in_order.size());
    std::vector<ReferenceCluster> clusters(roots_in_order.size());
    for (std::size_t c = 0; c < roots_in_order.size(); ++c) {
        cluster_index.emplace(roots_in_order[c], c);
        clusters[c].cluster_id = static_cast<std::uint64_t>(c);
    }
    for (std::size_t i = 0; i < refs.size(); ++i) {
        std::size_t c = cluster_index.at(uf.find(group_of[i]));
        clusters[c].members.push_back(refs[i]);
    }

    for (ReferenceCluster& cluster : clusters) {
        cluster.count = static_cast<std::int64_t>(cluster.members.size());

        struct VariantTally {
            std::size_t count = 0;
            std::string norm;
        };
        std::map<std::string, VariantTally> variants;  // keyed by raw string
        for (const CitedReference& member : cluster.members) {
            VariantTally& tally = variants[member.raw_string];
            if (tally.count == 0) tally.norm = normalize_reference(member.raw_string).norm;
            ++tally.count;
        }
        const std::string* best_raw = nullptr;
        const VariantTally* best = nullptr;
        for (const auto& [raw, tally] : variants) {
            bool better = best == nullptr || tally.count > best->count ||
                          (tally.count == best->count &&
                           (tally.norm < best->norm ||
                            (tally.norm == best->norm && raw < *best_raw)));
            if (better) {
                best_raw = &raw;
                best = &tally;
            }
        }
        cluster.canonical = *best_raw;

        std::map<int, std::size_t> year_votes;
        for (const CitedReference& member : cluster.members)
            if (member.ref_year) ++year_votes[*member.ref_year];
        if (!year_votes.empty()) {
            int best_year = 0;
            std::size_t best_votes = 0;
            for (const auto& [year, votes] : year_votes) {
                if (votes > best_votes) {  // ascending scan: first max is smallest year
                    best_votes = votes;
                    best_year = year;
                }
            }
            cluster.rpy = best_year;
        }

        for (const CitedReference& member : cluster.members) {
            if (member.raw_string == cluster.canonical) {
                cluster.language = member.language;
                break;
            }
        }
    }

    return clusters;
}

}  // namespace rootcite
