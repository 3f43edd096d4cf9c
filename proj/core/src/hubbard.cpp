#include "bhepn/hubbard.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bhepn/classify.hpp"

namespace bhepn::hubbard {

namespace {

constexpr double kSymmetryTol = 1e-12;

}  // namespace

ComplexMatrix bh_block(int n, double gamma) {
    if (n < 2) {
        throw ConfigError("BH block needs at least 2 levels, got " + std::to_string(n));
    }
    ComplexMatrix h(n, n);
    for (int j = 1; j <= n; ++j) {
        h(j - 1, j - 1) = Complex{0.0, gamma * (2 * j - n - 1)};
    }
    for (int j = 1; j < n; ++j) {
        const double hop = std::sqrt(static_cast<double>(j) * (n - j));
        h(j - 1, j) = hop;
        h(j, j - 1) = hop;
    }
    return h;
}

ComplexMatrix fock_block(int n_bosons, double gamma) {
    if (n_bosons < 1) {
        throw ConfigError("boson number must be at least 1, got " +
                          std::to_string(n_bosons));
    }
    const int dim = n_bosons + 1;
    ComplexMatrix h(dim, dim);
    // Basis state j (0-based) is |n1, n2> = |n_bosons - j, j>.
    for (int j = 0; j < dim; ++j) {
        const int n1 = n_bosons - j;
        const int n2 = j;
        h(j, j) = Complex{0.0, -gamma * (n1 - n2)};
        if (n2 >= 1) {
            // a1^+ a2 |n1, n2> = sqrt((n1+1) n2) |n1+1, n2-1>
            h(j - 1, j) = std::sqrt(static_cast<double>(n1 + 1) * n2);
        }
        if (n1 >= 1) {
            // a2^+ a1 |n1, n2> = sqrt(n1 (n2+1)) |n1-1, n2+1>
            h(j + 1, j) = std::sqrt(static_cast<double>(n1) * (n2 + 1));
        }
    }
    return h;
}

ComplexMatrix scaled_block(const BlockSpec& spec, double gamma) {
    spec.validate();
    ComplexMatrix h = bh_block(spec.size, gamma);
    h *= Complex{static_cast<double>(spec.scale), 0.0};
    return h;
}

DirectSumResult build_direct_sum(const ModelConfig& config, double gamma,
                                 bool allow_inadmissible) {
    const bool admissible = classify::is_admissible(config);
    if (!admissible && !allow_inadmissible) {
        throw ConfigError("inadmissible model: " + classify::admissibility_defect(config));
    }

    const int n = config.dimension;
    ComplexMatrix block_diag(n, n);
    std::vector<int> block_of(n);
    std::vector<int> diag_coeff(n);
    int offset = 0;
    for (size_t k = 0; k < config.blocks.size(); ++k) {
        const BlockSpec& spec = config.blocks[k];
        const ComplexMatrix h = scaled_block(spec, gamma);
        for (int i = 0; i < spec.size; ++i) {
            block_of[offset + i] = static_cast<int>(k);
            diag_coeff[offset + i] = spec.scale * (2 * (i + 1) - spec.size - 1);
            for (int j = 0; j < spec.size; ++j) {
                block_diag(offset + i, offset + j) = h(i, j);
            }
        }
        offset += spec.size;
    }

    // Canonical order: ascending imaginary diagonal coefficient. Admissible
    // configs have all-distinct coefficients; the index tie-break only keeps
    // the permutation total for forced inadmissible builds.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return diag_coeff[a] < diag_coeff[b]; });

    DirectSumResult result;
    result.matrix = ComplexMatrix(n, n);
    result.permutation = perm;
    result.block_of_position.resize(n);
    result.admissible = admissible;
    for (int p = 0; p < n; ++p) {
        result.block_of_position[p] = block_of[perm[p]];
        for (int q = 0; q < n; ++q) {
            result.matrix(p, q) = block_diag(perm[p], perm[q]);
        }
    }
    return result;
}

ComplexMatrix direct_sum_hamiltonian(const ModelConfig& config, double gamma) {
    return build_direct_sum(config, gamma).matrix;
}

std::vector<double> closed_form_spectrum(int n, double gamma) {
    return closed_form_spectrum(ModelConfig::single_block(n), gamma);
}

std::vector<double> closed_form_spectrum(const ModelConfig& config, double gamma) {
    if (std::abs(gamma) > 1.0) {
        throw ConfigError("closed-form spectrum requires |gamma| <= 1; the spectrum is "
                          "complex beyond the EPN");
    }
    const double stretch = std::sqrt((1.0 - gamma) * (1.0 + gamma));
    std::vector<double> levels;
    levels.reserve(config.dimension);
    for (const BlockSpec& block : config.blocks) {
        for (int index : classify::block_index_set(block).elements) {
            levels.push_back(index * stretch);
        }
    }
    std::sort(levels.begin(), levels.end());
    return levels;
}

ComplexMatrix parity_matrix(int n) {
    if (n < 1) {
        throw ConfigError("parity matrix needs positive dimension, got " + std::to_string(n));
    }
    ComplexMatrix p(n, n);
    for (int i = 0; i < n; ++i) p(i, n - 1 - i) = 1.0;
    return p;
}

SymmetryReport symmetry_report(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("symmetry report requires a square matrix, got " +
                             m.shape_string());
    }
    const double scale = frobenius_norm(m);
    SymmetryReport report;
    if (scale == 0.0) {
        report.complex_symmetric = true;
        report.pt_symmetric = true;
        return report;
    }
    const double sym_defect = frobenius_norm(m - m.transpose()) / scale;
    const ComplexMatrix p = parity_matrix(m.rows());
    const double pt_defect = frobenius_norm(matmul(matmul(p, m.conjugate()), p) - m) / scale;
    report.complex_symmetric = sym_defect <= kSymmetryTol;
    report.pt_symmetric = pt_defect <= kSymmetryTol;
    report.max_defect = std::max(sym_defect, pt_defect);
    return report;
}

}  // namespace bhepn::hubbard
