#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bhepn {

/// Invalid block sizes, scales, or partition data.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One building block of a direct-sum Hamiltonian: a BH block of `size`
/// levels, multiplied entrywise by the positive integer `scale`.
struct BlockSpec {
    int size = 0;
    int scale = 1;

    void validate() const {
        if (size < 2) {
            throw ConfigError("block size must be at least 2, got " + std::to_string(size));
        }
        if (scale < 1) {
            throw ConfigError("block scale must be a positive integer, got " +
                              std::to_string(scale));
        }
    }

    friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

/// A full model: dimension N plus the ordered (size, scale) block list. Kept
/// in canonical form — sizes nonincreasing, scales nondecreasing among equal
/// sizes — so that equal configurations compare equal.
struct ModelConfig {
    int dimension = 0;
    std::vector<BlockSpec> blocks;

    /// Validates and canonicalizes; the (size, scale) pairing is preserved.
    static ModelConfig make(int dimension, std::vector<BlockSpec> blocks);
    static ModelConfig make(int dimension, const std::vector<int>& sizes,
                            const std::vector<int>& scales);

    /// The K=1 model [N] with unit scale.
    static ModelConfig single_block(int dimension);

    int multiplicity() const { return static_cast<int>(blocks.size()); }
    std::vector<int> partition() const;
    std::vector<int> scales() const;

    friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

enum class CouplingRegime { kSubcritical, kExceptional, kSupercritical };

/// The dimensionless coupling gamma; |gamma| = 1 is the EPN/BEC point.
struct CouplingParameter {
    double gamma = 0.0;

    CouplingRegime regime() const {
        const double mag = gamma < 0.0 ? -gamma : gamma;
        if (mag < 1.0) return CouplingRegime::kSubcritical;
        if (mag == 1.0) return CouplingRegime::kExceptional;
        return CouplingRegime::kSupercritical;
    }
};

}  // namespace bhepn
