#include "bhepn/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "bhepn/classify.hpp"

namespace bhepn::io {

namespace {

using nlohmann::ordered_json;

ordered_json matrix_entries(const ComplexMatrix& m) {
    ordered_json entries = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            entries.push_back({{"re", m(i, j).real()}, {"im", m(i, j).imag()}});
        }
    }
    return entries;
}

ordered_json config_metadata(const ModelConfig& config, double gamma, bool admissible) {
    ordered_json meta;
    meta["N"] = config.dimension;
    meta["partition"] = config.partition();
    meta["scales"] = config.scales();
    meta["gamma"] = gamma;
    meta["admissible"] = admissible;
    return meta;
}

std::string config_summary(const ModelConfig& config) {
    std::string out = "N=" + std::to_string(config.dimension) + " partition=[";
    const auto parts = config.partition();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts[i]);
    }
    out += "] scales=[";
    const auto scales = config.scales();
    for (size_t i = 0; i < scales.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(scales[i]);
    }
    return out + "]";
}

}  // namespace

std::string format_float(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.15g", value);
    return buffer;
}

ModelConfig config_from_json_text(const std::string& text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (parsed.is_number_integer()) {
        return ModelConfig::single_block(parsed.get<int>());
    }
    if (!parsed.is_object()) {
        throw ConfigError("config must be a JSON object with N, partition, scales");
    }
    if (!parsed.contains("N") || !parsed["N"].is_number_integer()) {
        throw ConfigError("config needs an integer field \"N\"");
    }
    const int n = parsed["N"].get<int>();
    if (!parsed.contains("partition")) {
        if (parsed.contains("scales")) {
            throw ConfigError("config has scales but no partition");
        }
        return ModelConfig::single_block(n);
    }
    auto read_int_array = [&](const char* key) {
        if (!parsed[key].is_array()) {
            throw ConfigError(std::string("config field \"") + key +
                              "\" must be an array of integers");
        }
        std::vector<int> out;
        for (const auto& item : parsed[key]) {
            if (!item.is_number_integer()) {
                throw ConfigError(std::string("config field \"") + key +
                                  "\" must be an array of integers");
            }
            out.push_back(item.get<int>());
        }
        return out;
    };
    const std::vector<int> partition = read_int_array("partition");
    std::vector<int> scales;
    if (parsed.contains("scales")) {
        scales = read_int_array("scales");
    } else {
        scales.assign(partition.size(), 1);
    }
    return ModelConfig::make(n, partition, scales);
}

void SweepRequest::validate() const {
    if (!(gamma_min >= 0.0) || !(gamma_min < gamma_max) || !(gamma_max <= 1.0)) {
        throw ConfigError("sweep range must satisfy 0 <= min < max <= 1, got " +
                          format_float(gamma_min) + ":" + format_float(gamma_max));
    }
    if (steps < 2) {
        throw ConfigError("sweep needs at least 2 steps, got " + std::to_string(steps));
    }
}

std::vector<SpectrumSample> sweep_samples(const SweepRequest& request) {
    request.validate();
    std::vector<SpectrumSample> samples;
    samples.reserve(request.steps);
    for (int step = 0; step < request.steps; ++step) {
        // Inclusive endpoints; the last point lands on gamma_max exactly.
        const double t = static_cast<double>(step) / (request.steps - 1);
        const double gamma = request.gamma_min + t * (request.gamma_max - request.gamma_min);
        SpectrumSample sample;
        sample.gamma = gamma;
        for (double level : hubbard::closed_form_spectrum(request.config, gamma)) {
            sample.eigenvalues.push_back(Complex{level, 0.0});
        }
        samples.push_back(std::move(sample));
    }
    return samples;
}

std::string sweep_csv(const SweepRequest& request) {
    std::string out = "gamma,level_index,re,im\n";
    for (const SpectrumSample& sample : sweep_samples(request)) {
        for (size_t level = 0; level < sample.eigenvalues.size(); ++level) {
            out += format_float(sample.gamma);
            out += ',';
            out += std::to_string(level);
            out += ',';
            out += format_float(sample.eigenvalues[level].real());
            out += ',';
            out += format_float(sample.eigenvalues[level].imag());
            out += '\n';
        }
    }
    return out;
}

std::string build_dump_json(const ModelConfig& config, double gamma,
                            const hubbard::DirectSumResult& result) {
    ordered_json doc = config_metadata(config, gamma, result.admissible);
    doc["entries"] = matrix_entries(result.matrix);
    return doc.dump(2) + "\n";
}

std::string build_dump_csv(const ModelConfig& config, double gamma,
                           const hubbard::DirectSumResult& result) {
    std::string out = "# " + config_summary(config) + " gamma=" + format_float(gamma) +
                      " admissible=" + (result.admissible ? "true" : "false") + "\n";
    out += "row,col,re,im\n";
    const ComplexMatrix& m = result.matrix;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            out += std::to_string(i) + "," + std::to_string(j) + "," +
                   format_float(m(i, j).real()) + "," + format_float(m(i, j).imag()) + "\n";
        }
    }
    return out;
}

std::string enumerate_json(int n) {
    ordered_json doc;
    doc["N"] = n;
    ordered_json models = ordered_json::array();
    const auto configs = classify::enumerate_models(n);
    for (const ModelConfig& config : configs) {
        ordered_json entry;
        entry["partition"] = config.partition();
        entry["scales"] = config.scales();
        entry["K"] = config.multiplicity();
        entry["index_notation"] = classify::render_index_notation(config);
        models.push_back(std::move(entry));
    }
    doc["models"] = std::move(models);
    doc["totals"] = {{"P", classify::count_partitions(n)},
                     {"a", static_cast<long long>(configs.size())}};
    return doc.dump(2) + "\n";
}

std::string enumerate_csv(int n) {
    std::string out = "N,model_index,K,partition,scales,index_notation\n";
    const auto configs = classify::enumerate_models(n);
    for (size_t i = 0; i < configs.size(); ++i) {
        const ModelConfig& config = configs[i];
        out += std::to_string(n) + "," + std::to_string(i + 1) + "," +
               std::to_string(config.multiplicity()) + ",";
        const auto parts = config.partition();
        for (size_t k = 0; k < parts.size(); ++k) {
            if (k > 0) out += "+";
            out += std::to_string(parts[k]);
        }
        out += ",";
        const auto scales = config.scales();
        for (size_t k = 0; k < scales.size(); ++k) {
            if (k > 0) out += "+";
            out += std::to_string(scales[k]);
        }
        out += "," + classify::render_index_notation(config) + "\n";
    }
    return out;
}

std::string enumerate_plain(int n) {
    const auto configs = classify::enumerate_models(n);
    std::ostringstream out;
    out << " N   #   K   partition        scales           index\n";
    for (size_t i = 0; i < configs.size(); ++i) {
        const ModelConfig& config = configs[i];
        std::string partition = "[";
        const auto parts = config.partition();
        for (size_t k = 0; k < parts.size(); ++k) {
            if (k > 0) partition += ",";
            partition += std::to_string(parts[k]);
        }
        partition += "]";
        std::string scales = "{";
        const auto scale_list = config.scales();
        for (size_t k = 0; k < scale_list.size(); ++k) {
            if (k > 0) scales += ",";
            scales += std::to_string(scale_list[k]);
        }
        scales += "}";
        char line[128];
        std::snprintf(line, sizeof(line), "%2d  %2zu  %2d   %-16s %-16s %s\n", n, i + 1,
                      config.multiplicity(), partition.c_str(), scales.c_str(),
                      classify::render_index_notation(config).c_str());
        out << line;
    }
    out << "totals: P(" << n << ") = " << classify::count_partitions(n) << ", a(" << n
        << ") = " << configs.size() << "\n";
    return out.str();
}

std::string jordan_report_json(const epn::JordanReport& report) {
    ordered_json doc;
    doc["N"] = report.dimension;
    doc["eta"] = report.eta;
    doc["K"] = report.geometric_multiplicity;
    doc["segre"] = report.segre;
    doc["residual"] = report.residual;
    doc["condition_estimate"] = report.condition_estimate;
    doc["transition_matrix"] = {{"rows", report.transition_matrix.rows()},
                                {"cols", report.transition_matrix.cols()},
                                {"entries", matrix_entries(report.transition_matrix)}};
    return doc.dump(2) + "\n";
}

}  // namespace bhepn::io
