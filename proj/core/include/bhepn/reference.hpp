#pragma once

#include <array>

namespace bhepn::reference {

/// Published counts P(N) of partitions with parts >= 2, N = 2..20.
inline constexpr int kPartitionCountMin = 2;
inline constexpr int kPartitionCountMax = 20;
inline constexpr std::array<long long, 19> kPartitionCounts = {
    1, 1, 2, 2, 4, 4, 7, 8, 12, 14, 21, 24, 34, 41, 55, 66, 88, 105, 137};

/// Published counts a(N) of admissible direct-sum models, N = 2..15.
inline constexpr int kModelCountMin = 2;
inline constexpr int kModelCountMax = 15;
inline constexpr std::array<long long, 14> kModelCounts = {1, 1, 2,  3, 3,  6, 4,
                                                           11, 6, 17, 7, 32, 8, 47};

inline long long partition_count(int n) {
    return kPartitionCounts[static_cast<size_t>(n - kPartitionCountMin)];
}

inline long long model_count(int n) {
    return kModelCounts[static_cast<size_t>(n - kModelCountMin)];
}

}  // namespace bhepn::reference
