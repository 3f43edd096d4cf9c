#include "bhepn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "bhepn/classify.hpp"
#include "bhepn/epn.hpp"
#include "bhepn/hubbard.hpp"
#include "bhepn/linalg.hpp"
#include "bhepn/reference.hpp"

namespace bhepn::verify {

namespace {

struct Worst {
    double value = 0.0;
    std::string where;

    void update(double v, const std::string& w) {
        if (v >= value) {
            value = v;
            where = w;
        }
    }
};

std::string config_label(const ModelConfig& config) {
    std::ostringstream out;
    out << "N=" << config.dimension << " [";
    for (size_t i = 0; i < config.blocks.size(); ++i) {
        if (i > 0) out << ",";
        out << config.blocks[i].size;
    }
    out << "] scales (";
    for (size_t i = 0; i < config.blocks.size(); ++i) {
        if (i > 0) out << ",";
        out << config.blocks[i].scale;
    }
    out << ")";
    return out.str();
}

CheckResult make_result(const std::string& name, bool passed, const Worst& worst,
                        double tolerance) {
    std::ostringstream detail;
    detail << "max defect " << worst.value << " (tolerance " << tolerance << ")";
    if (!worst.where.empty()) detail << " at " << worst.where;
    return {name, passed, detail.str()};
}

}  // namespace

std::vector<CheckResult> run_verification(int n_max) {
    if (n_max < 2) {
        throw ConfigError("verification needs n_max >= 2, got " + std::to_string(n_max));
    }
    std::vector<CheckResult> results;

    std::vector<std::vector<ModelConfig>> models_by_n(n_max + 1);
    for (int n = 2; n <= n_max; ++n) models_by_n[n] = classify::enumerate_models(n);

    // Fock-space oracle: the sector matrix of the second-quantized Hamiltonian
    // must reproduce the tridiagonal block entrywise.
    {
        Worst worst;
        const int cap = std::min(n_max, 12);
        for (int n = 2; n <= cap; ++n) {
            for (double gamma : {0.0, 0.3, 0.7, 1.0}) {
                const double defect = frobenius_norm(hubbard::fock_block(n - 1, gamma) -
                                                     hubbard::bh_block(n, gamma));
                worst.update(defect, "N=" + std::to_string(n));
            }
        }
        results.push_back(make_result("fock-oracle equality", worst.value <= 1e-12, worst,
                                      1e-12));
    }

    // Isospectrality: numerical spectra of every admissible direct sum agree
    // with the tridiagonal block and the closed form.
    {
        Worst worst;
        for (int n = 2; n <= n_max; ++n) {
            for (const ModelConfig& config : models_by_n[n]) {
                for (double gamma : {0.1, 0.5, 0.9}) {
                    const auto exact = hubbard::closed_form_spectrum(n, gamma);
                    auto check = [&](const ComplexMatrix& h, const char* tag) {
                        auto values = linalg::eigenvalues(h);
                        std::sort(values.begin(), values.end(),
                                  [](Complex a, Complex b) {
                                      if (a.real() != b.real()) return a.real() < b.real();
                                      return a.imag() < b.imag();
                                  });
                        for (int i = 0; i < n; ++i) {
                            worst.update(std::abs(values[i] - Complex{exact[i], 0.0}),
                                         config_label(config) + " gamma=" +
                                             std::to_string(gamma) + " " + tag);
                        }
                    };
                    check(hubbard::direct_sum_hamiltonian(config, gamma), "direct-sum");
                    if (config.multiplicity() == 1) {
                        check(hubbard::bh_block(n, gamma), "block");
                    }
                }
            }
        }
        results.push_back(make_result("isospectrality", worst.value <= 1e-8, worst, 1e-8));
    }

    // Complex symmetry and PT-symmetry of every constructed Hamiltonian.
    {
        Worst worst;
        bool flags_ok = true;
        for (int n = 2; n <= n_max; ++n) {
            for (const ModelConfig& config : models_by_n[n]) {
                for (double gamma : {0.0, 0.5, 1.0}) {
                    const auto report = hubbard::symmetry_report(
                        hubbard::direct_sum_hamiltonian(config, gamma));
                    flags_ok = flags_ok && report.complex_symmetric && report.pt_symmetric;
                    worst.update(report.max_defect,
                                 config_label(config) + " gamma=" + std::to_string(gamma));
                }
            }
        }
        results.push_back(
            make_result("symmetry (H = H^T, PT)", flags_ok && worst.value <= 1e-12, worst,
                        1e-12));
    }

    // EPN structure at gamma = 1.
    {
        Worst nilpotency;
        bool multiplicity_ok = true;
        bool segre_ok = true;
        std::string offender;
        const int cap = std::min(n_max, 12);
        for (int n = 2; n <= cap; ++n) {
            for (const ModelConfig& config : models_by_n[n]) {
                const ComplexMatrix h = hubbard::direct_sum_hamiltonian(config, 1.0);
                const auto mult = epn::geometric_multiplicity(h);
                nilpotency.update(mult.nilpotency_defect, config_label(config));
                if (mult.value != config.multiplicity()) {
                    multiplicity_ok = false;
                    offender = config_label(config);
                }
                if (epn::segre_characteristic(h) != config.partition()) {
                    segre_ok = false;
                    offender = config_label(config);
                }
            }
        }
        results.push_back(make_result("EPN nilpotency", nilpotency.value <= 1e-6,
                                      nilpotency, 1e-6));
        results.push_back({"geometric multiplicity = K", multiplicity_ok,
                           multiplicity_ok ? "all configs match" : "mismatch at " + offender});
        results.push_back({"Segre characteristic = partition", segre_ok,
                           segre_ok ? "all configs match" : "mismatch at " + offender});
    }

    // Published count tables.
    {
        bool ok = true;
        std::ostringstream detail;
        detail << "P(N) =";
        const int cap = std::min(n_max, reference::kPartitionCountMax);
        for (int n = 2; n <= cap; ++n) {
            const long long counted = classify::count_partitions(n);
            detail << " " << counted;
            ok = ok && counted == reference::partition_count(n);
        }
        results.push_back({"partition counts P(N)", ok, detail.str()});
    }
    {
        bool ok = true;
        std::ostringstream detail;
        detail << "a(N) =";
        const int cap = std::min(n_max, reference::kModelCountMax);
        for (int n = 2; n <= cap; ++n) {
            const long long counted = static_cast<long long>(models_by_n[n].size());
            detail << " " << counted;
            ok = ok && counted == reference::model_count(n);
        }
        results.push_back({"model counts a(N)", ok, detail.str()});
    }

    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

}  // namespace bhepn::verify
