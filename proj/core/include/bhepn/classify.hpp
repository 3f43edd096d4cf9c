#pragma once

#include <string>
#include <vector>

#include "bhepn/model.hpp"

namespace bhepn::classify {

/// Nonincreasing parts, each >= 2.
struct Partition {
    std::vector<int> parts;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// A sorted, centrally symmetric, equidistant set of integer quantum numbers.
struct IndexSet {
    std::vector<int> elements;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

/// S(N) = {1-N, 3-N, ..., N-3, N-1}.
IndexSet full_index_set(int n);

/// Scaled block set {(1-M)c, (3-M)c, ..., (M-1)c}.
IndexSet block_index_set(const BlockSpec& spec);

/// All partitions of n into parts >= 2, in reverse-lexicographic order.
std::vector<Partition> partitions_min2(int n);

/// |partitions_min2(n)|. Equals p(n) - p(n-1) for the unrestricted partition
/// counts p.
long long count_partitions(int n);

/// True iff the block index sets tile S(N) exactly, each element once.
bool is_admissible(const ModelConfig& config);

/// Human-readable reason the union condition fails; empty when admissible.
std::string admissibility_defect(const ModelConfig& config);

/// All admissible configs of dimension n, partitions in reverse-lexicographic
/// order and scale lists lexicographic within a partition. Scales are searched
/// over 1 <= c <= n-1, which is exhaustive since the largest block element
/// (M-1)c must stay inside S(N).
std::vector<ModelConfig> enumerate_models(int n);

/// |enumerate_models(n)|.
long long count_models(int n);

/// Spectral index notation: per block, the nonnegative elements of its index
/// set, blocks ordered by ascending smallest nonnegative element. Compact
/// digit form "{02}{4}" when every element is a single digit, otherwise
/// comma-separated "{0,2,12}" throughout.
std::string render_index_notation(const ModelConfig& config);

/// Inverse of render_index_notation; accepts both the compact and the
/// comma-separated form. Returns the nonnegative elements per block.
std::vector<std::vector<int>> parse_index_notation(const std::string& text);

}  // namespace bhepn::classify
