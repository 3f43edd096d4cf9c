#pragma once

#include <string>
#include <vector>

#include "bhepn/complex_matrix.hpp"
#include "bhepn/epn.hpp"
#include "bhepn/hubbard.hpp"
#include "bhepn/model.hpp"

namespace bhepn::io {

/// Fixed 15-significant-digit rendering (lowercase scientific when needed);
/// identical inputs always produce identical text.
std::string format_float(double value);

/// Parses {"N": int, "partition": [int...], "scales": [int...]}. A bare
/// integer is shorthand for the K=1 model {[N], (1)}.
ModelConfig config_from_json_text(const std::string& text);

/// One gamma sample of a spectral sweep; closed-form levels are real, so the
/// imaginary parts are exactly zero.
struct SpectrumSample {
    double gamma = 0.0;
    std::vector<Complex> eigenvalues;  // sorted by real part
};

struct SweepRequest {
    ModelConfig config;
    double gamma_min = 0.0;
    double gamma_max = 1.0;
    int steps = 2;

    void validate() const;
};

/// Exact per-block spectral flow over an inclusive, uniform gamma grid.
std::vector<SpectrumSample> sweep_samples(const SweepRequest& request);

/// CSV stream with mandatory header `gamma,level_index,re,im`.
std::string sweep_csv(const SweepRequest& request);

/// Entry dump (row-major re/im pairs) with an N/partition/scales/gamma/
/// admissible metadata block.
std::string build_dump_json(const ModelConfig& config, double gamma,
                            const hubbard::DirectSumResult& result);

/// Same dump as CSV: `#`-prefixed metadata lines, then `row,col,re,im`.
std::string build_dump_csv(const ModelConfig& config, double gamma,
                           const hubbard::DirectSumResult& result);

std::string enumerate_json(int n);
std::string enumerate_csv(int n);
std::string enumerate_plain(int n);

std::string jordan_report_json(const epn::JordanReport& report);

}  // namespace bhepn::io
