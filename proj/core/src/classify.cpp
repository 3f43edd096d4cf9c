#include "bhepn/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bhepn::classify {

namespace {

void require_dimension(int n) {
    if (n < 2) {
        throw ConfigError("dimension must be at least 2, got " + std::to_string(n));
    }
}

void extend_partitions(int remaining, int max_part, std::vector<int>& current,
                       std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{current});
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 2; --part) {
        if (remaining - part == 1) continue;  // a leftover of 1 can never be a part
        current.push_back(part);
        extend_partitions(remaining - part, part, current, out);
        current.pop_back();
    }
}

// Scales for blocks[k...] such that their index sets tile exactly the
// `remaining` multiset. Equal-size runs keep scales nondecreasing, so each
// model appears once, in lexicographic scale order.
void assign_scales(int n, const std::vector<int>& parts, size_t k, int min_scale_same_size,
                   std::set<int>& remaining, std::vector<int>& scales,
                   std::vector<ModelConfig>& out) {
    if (k == parts.size()) {
        if (remaining.empty()) {
            out.push_back(ModelConfig::make(n, parts, scales));
        }
        return;
    }
    const int m = parts[k];
    const int c_min = (k > 0 && parts[k - 1] == m) ? min_scale_same_size : 1;
    const int c_max = (n - 1) / (m - 1);
    for (int c = c_min; c <= c_max; ++c) {
        const IndexSet set = block_index_set({m, c});
        bool fits = true;
        for (int e : set.elements) {
            if (remaining.find(e) == remaining.end()) {
                fits = false;
                break;
            }
        }
        if (!fits) continue;
        for (int e : set.elements) remaining.erase(e);
        scales.push_back(c);
        assign_scales(n, parts, k + 1, c, remaining, scales, out);
        scales.pop_back();
        for (int e : set.elements) remaining.insert(e);
    }
}

}  // namespace

IndexSet full_index_set(int n) {
    require_dimension(n);
    IndexSet s;
    s.elements.reserve(n);
    for (int e = 1 - n; e <= n - 1; e += 2) s.elements.push_back(e);
    return s;
}

IndexSet block_index_set(const BlockSpec& spec) {
    spec.validate();
    IndexSet s;
    s.elements.reserve(spec.size);
    for (int j = 1 - spec.size; j <= spec.size - 1; j += 2) {
        s.elements.push_back(j * spec.scale);
    }
    return s;
}

std::vector<Partition> partitions_min2(int n) {
    require_dimension(n);
    std::vector<Partition> out;
    std::vector<int> current;
    extend_partitions(n, n, current, out);
    return out;
}

long long count_partitions(int n) {
    return static_cast<long long>(partitions_min2(n).size());
}

std::string admissibility_defect(const ModelConfig& config) {
    std::map<int, int> covered;
    for (const BlockSpec& block : config.blocks) {
        for (int e : block_index_set(block).elements) ++covered[e];
    }
    for (const auto& [e, count] : covered) {
        if (count > 1) {
            return "index " + std::to_string(e) + " is covered " + std::to_string(count) +
                   " times";
        }
    }
    for (int e : full_index_set(config.dimension).elements) {
        if (covered.find(e) == covered.end()) {
            return "index " + std::to_string(e) + " is not covered";
        }
    }
    return {};
}

bool is_admissible(const ModelConfig& config) {
    std::vector<int> covered;
    for (const BlockSpec& block : config.blocks) {
        const IndexSet set = block_index_set(block);
        covered.insert(covered.end(), set.elements.begin(), set.elements.end());
    }
    std::sort(covered.begin(), covered.end());
    return covered == full_index_set(config.dimension).elements;
}

std::vector<ModelConfig> enumerate_models(int n) {
    require_dimension(n);
    std::vector<ModelConfig> out;
    for (const Partition& partition : partitions_min2(n)) {
        std::set<int> remaining;
        for (int e : full_index_set(n).elements) remaining.insert(e);
        std::vector<int> scales;
        assign_scales(n, partition.parts, 0, 1, remaining, scales, out);
    }
    return out;
}

long long count_models(int n) {
    return static_cast<long long>(enumerate_models(n).size());
}

std::string render_index_notation(const ModelConfig& config) {
    if (!is_admissible(config)) {
        throw ConfigError("index notation is only defined for admissible models: " +
                          admissibility_defect(config));
    }
    // One entry per block: its nonnegative index-set elements, led by the
    // smallest of them. Disjointness makes the leads distinct.
    std::vector<std::vector<int>> groups;
    int max_element = 0;
    for (const BlockSpec& block : config.blocks) {
        std::vector<int> nonneg;
        for (int e : block_index_set(block).elements) {
            if (e >= 0) nonneg.push_back(e);
        }
        max_element = std::max(max_element, nonneg.back());
        groups.push_back(std::move(nonneg));
    }
    std::sort(groups.begin(), groups.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });

    const bool compact = max_element < 10;
    std::string out;
    for (const std::vector<int>& group : groups) {
        out += '{';
        for (size_t i = 0; i < group.size(); ++i) {
            if (!compact && i > 0) out += ',';
            out += std::to_string(group[i]);
        }
        out += '}';
    }
    return out;
}

std::vector<std::vector<int>> parse_index_notation(const std::string& text) {
    std::vector<std::string> bodies;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '{') {
            throw ConfigError("index notation: expected '{' at position " +
                              std::to_string(pos));
        }
        const size_t close = text.find('}', pos);
        if (close == std::string::npos) {
            throw ConfigError("index notation: unterminated group");
        }
        bodies.push_back(text.substr(pos + 1, close - pos - 1));
        if (bodies.back().empty()) {
            throw ConfigError("index notation: empty group");
        }
        for (char ch : bodies.back()) {
            if ((ch < '0' || ch > '9') && ch != ',') {
                throw ConfigError("index notation: unexpected character in group");
            }
        }
        pos = close + 1;
    }
    if (bodies.empty()) {
        throw ConfigError("index notation: no groups found");
    }

    // The string is compact (one digit per element) only if no group carries a
    // comma and every multi-character body reads as strictly increasing digits;
    // index sets are strictly increasing, so a body like "11" must be the
    // two-digit number eleven, not the digits {1, 1}.
    bool compact = true;
    for (const std::string& body : bodies) {
        if (body.find(',') != std::string::npos) {
            compact = false;
            break;
        }
        for (size_t i = 1; i < body.size(); ++i) {
            if (body[i] <= body[i - 1]) {
                compact = false;
                break;
            }
        }
    }

    std::vector<std::vector<int>> groups;
    for (const std::string& body : bodies) {
        std::vector<int> group;
        if (compact) {
            for (char ch : body) group.push_back(ch - '0');
        } else {
            size_t start = 0;
            while (start <= body.size()) {
                const size_t comma = body.find(',', start);
                const std::string token =
                    body.substr(start, comma == std::string::npos ? comma : comma - start);
                if (token.empty()) {
                    throw ConfigError("index notation: empty element in group");
                }
                group.push_back(std::stoi(token));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        groups.push_back(std::move(group));
    }
    return groups;
}

}  // namespace bhepn::classify
