#include "bhepn/model.hpp"

#include <algorithm>

namespace bhepn {

ModelConfig ModelConfig::make(int dimension, std::vector<BlockSpec> blocks) {
    if (blocks.empty()) {
        throw ConfigError("a model needs at least one block");
    }
    int total = 0;
    for (const BlockSpec& b : blocks) {
        b.validate();
        total += b.size;
    }
    if (total != dimension) {
        throw ConfigError("block sizes sum to " + std::to_string(total) +
                          ", expected dimension " + std::to_string(dimension));
    }
    std::stable_sort(blocks.begin(), blocks.end(), [](const BlockSpec& a, const BlockSpec& b) {
        if (a.size != b.size) return a.size > b.size;
        return a.scale < b.scale;
    });
    return ModelConfig{dimension, std::move(blocks)};
}

ModelConfig ModelConfig::make(int dimension, const std::vector<int>& sizes,
                              const std::vector<int>& scales) {
    if (sizes.size() != scales.size()) {
        throw ConfigError("partition has " + std::to_string(sizes.size()) +
                          " parts but " + std::to_string(scales.size()) + " scales");
    }
    std::vector<BlockSpec> blocks(sizes.size());
    for (size_t k = 0; k < sizes.size(); ++k) blocks[k] = {sizes[k], scales[k]};
    return make(dimension, std::move(blocks));
}

ModelConfig ModelConfig::single_block(int dimension) {
    return make(dimension, {BlockSpec{dimension, 1}});
}

std::vector<int> ModelConfig::partition() const {
    std::vector<int> parts(blocks.size());
    for (size_t k = 0; k < blocks.size(); ++k) parts[k] = blocks[k].size;
    return parts;
}

std::vector<int> ModelConfig::scales() const {
    std::vector<int> out(blocks.size());
    for (size_t k = 0; k < blocks.size(); ++k) out[k] = blocks[k].scale;
    return out;
}

}  // namespace bhepn
