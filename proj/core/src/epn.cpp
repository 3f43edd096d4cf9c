#include "bhepn/epn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bhepn/hubbard.hpp"
#include "bhepn/linalg.hpp"

namespace bhepn::epn {

namespace {

std::string sequence_string(const std::vector<int>& seq) {
    std::string out = "[";
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(seq[i]);
    }
    return out + "]";
}

ComplexMatrix column_vector(const std::vector<Complex>& v) {
    ComplexMatrix m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
    return m;
}

}  // namespace

MultiplicityResult geometric_multiplicity(const ComplexMatrix& h, double tol) {
    if (!h.is_square()) {
        throw DimensionError("geometric multiplicity requires a square matrix, got " +
                             h.shape_string());
    }
    const int n = h.rows();
    MultiplicityResult result;
    result.value = n - linalg::numerical_rank(h, tol);

    const double scale = frobenius_norm(h);
    if (scale == 0.0) {
        result.nilpotency_defect = 0.0;
        result.nilpotent = true;
        return result;
    }
    ComplexMatrix power = h;
    for (int j = 1; j < n; ++j) power = matmul(power, h);
    result.nilpotency_defect = frobenius_norm(power) / std::pow(scale, n);
    result.nilpotent = result.nilpotency_defect <= tol;
    return result;
}

std::vector<int> segre_characteristic(const ComplexMatrix& h, double tol) {
    if (!h.is_square()) {
        throw DimensionError("Segre characteristic requires a square matrix, got " +
                             h.shape_string());
    }
    const int n = h.rows();
    const auto base = linalg::svd(h);
    const double sigma_max = base.singular_values.empty() ? 0.0 : base.singular_values[0];

    // Rank of h^j against the natural scale sigma_max(h)^j. Anchoring at the
    // power's own largest singular value would count pure rounding noise as
    // rank once h^j vanishes.
    std::vector<int> ranks{n};  // rank of h^0
    ComplexMatrix power = ComplexMatrix::identity(n);
    double cutoff = tol;
    for (int j = 1; j <= n && ranks.back() > 0; ++j) {
        power = matmul(power, h);
        cutoff *= sigma_max;
        const auto dec = linalg::svd(power);
        int rank = 0;
        for (double s : dec.singular_values) {
            if (s > cutoff) ++rank;
        }
        ranks.push_back(rank);
    }
    for (size_t j = 1; j < ranks.size(); ++j) {
        if (ranks[j] > ranks[j - 1]) {
            throw NumericalError("rank sequence is not monotone nonincreasing: " +
                                 sequence_string(ranks));
        }
    }
    if (ranks.back() != 0) {
        throw NumericalError("matrix is not nilpotent to tolerance; rank sequence " +
                             sequence_string(ranks) + " never reaches zero");
    }

    // blocks_ge[j] = number of Jordan blocks of size >= j.
    std::vector<int> blocks_ge;
    for (size_t j = 1; j < ranks.size(); ++j) {
        blocks_ge.push_back(ranks[j - 1] - ranks[j]);
    }
    for (size_t j = 1; j < blocks_ge.size(); ++j) {
        if (blocks_ge[j] > blocks_ge[j - 1]) {
            throw NumericalError("rank differences are not monotone: " +
                                 sequence_string(ranks));
        }
    }
    std::vector<int> sizes;
    for (size_t j = 0; j < blocks_ge.size(); ++j) {
        const int exactly =
            blocks_ge[j] - (j + 1 < blocks_ge.size() ? blocks_ge[j + 1] : 0);
        for (int b = 0; b < exactly; ++b) sizes.push_back(static_cast<int>(j) + 1);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

ComplexMatrix jordan_matrix(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw ConfigError("Jordan block sizes must be positive");
        n += s;
    }
    ComplexMatrix j(n, n);
    int offset = 0;
    for (int s : sizes) {
        for (int i = 0; i + 1 < s; ++i) j(offset + i, offset + i + 1) = 1.0;
        offset += s;
    }
    return j;
}

std::vector<std::vector<Complex>> jordan_chain(const ComplexMatrix& h) {
    const int m = h.rows();
    const linalg::SingularValueDecomposition dec = linalg::svd(h);
    const double sigma_max = dec.singular_values.front();
    if (m > 1 && sigma_max > 0.0 &&
        dec.singular_values[m - 2] <= 1e-8 * sigma_max) {
        throw NumericalError("block kernel is not one-dimensional; cannot build a single "
                             "Jordan chain");
    }
    if (sigma_max > 0.0 && dec.singular_values[m - 1] > 1e-8 * sigma_max) {
        throw NumericalError("block has trivial kernel; input is not nilpotent");
    }

    // Kernel vector, rescaled so its first largest-magnitude entry is 1.
    std::vector<Complex> v1(m);
    int top = 0;
    for (int i = 0; i < m; ++i) {
        v1[i] = dec.v(i, m - 1);
        if (std::abs(v1[i]) > std::abs(v1[top])) top = i;
    }
    const Complex pivot = v1[top];
    for (int i = 0; i < m; ++i) v1[i] /= pivot;

    std::vector<std::vector<Complex>> chain{v1};
    for (int j = 1; j < m; ++j) {
        const ComplexMatrix next = linalg::solve(h, column_vector(chain.back()));
        std::vector<Complex> v(m);
        for (int i = 0; i < m; ++i) v[i] = next(i, 0);
        chain.push_back(std::move(v));
    }
    return chain;
}

JordanReport transition_matrix(const ModelConfig& config) {
    const hubbard::DirectSumResult sum = hubbard::build_direct_sum(config, 1.0);
    const int n = config.dimension;

    // Chains are built per sub-block; the direct-sum structure keeps
    // cross-block coupling exactly zero.
    ComplexMatrix q_blockdiag(n, n);
    int offset = 0;
    for (const BlockSpec& spec : config.blocks) {
        const ComplexMatrix block = hubbard::scaled_block(spec, 1.0);
        const auto chain = jordan_chain(block);
        for (int col = 0; col < spec.size; ++col) {
            for (int row = 0; row < spec.size; ++row) {
                q_blockdiag(offset + row, offset + col) = chain[col][row];
            }
        }
        offset += spec.size;
    }

    // Row-permute into the canonical basis of the direct-sum Hamiltonian.
    ComplexMatrix q(n, n);
    for (int p = 0; p < n; ++p) {
        for (int c = 0; c < n; ++c) q(p, c) = q_blockdiag(sum.permutation[p], c);
    }

    JordanReport report;
    report.dimension = n;
    report.eta = 0.0;
    report.geometric_multiplicity = config.multiplicity();
    report.segre = config.partition();
    report.transition_matrix = q;

    const ComplexMatrix jordan = jordan_matrix(report.segre);
    const double denom = frobenius_norm(sum.matrix) * frobenius_norm(q);
    report.residual = frobenius_norm(matmul(sum.matrix, q) - matmul(q, jordan)) / denom;

    const linalg::SingularValueDecomposition qsvd = linalg::svd(q);
    const double sigma_max = qsvd.singular_values.front();
    const double sigma_min = qsvd.singular_values.back();
    report.condition_estimate =
        sigma_min > 0.0 ? sigma_max / sigma_min : std::numeric_limits<double>::infinity();

    if (sigma_min <= 1e-8 * sigma_max) {
        throw NumericalError("transition matrix failed the invertibility gate; condition "
                             "estimate " + std::to_string(report.condition_estimate));
    }
    if (report.residual > 1e-8) {
        throw NumericalError("transition matrix residual " + std::to_string(report.residual) +
                             " exceeds 1e-8");
    }
    return report;
}

std::vector<CoalescenceSample> coalescence_profile(const ModelConfig& config,
                                                   const std::vector<double>& gammas) {
    for (double g : gammas) {
        if (g < 0.0 || g >= 1.0) {
            throw ConfigError("coalescence profile needs gamma in [0, 1), got " +
                              std::to_string(g));
        }
    }
    const int n = config.dimension;
    const int k = config.multiplicity();

    std::vector<CoalescenceSample> samples;
    samples.reserve(gammas.size());
    for (double gamma : gammas) {
        const hubbard::DirectSumResult sum = hubbard::build_direct_sum(config, gamma);
        const linalg::EigenDecomposition eig = linalg::eigen_decompose(sum.matrix);

        // Group eigenvectors by dominant block support; structural for a
        // direct sum, so the 0.5 threshold is never marginal.
        std::vector<std::vector<int>> members(k);
        for (int col = 0; col < n; ++col) {
            std::vector<double> mass(k, 0.0);
            for (int row = 0; row < n; ++row) {
                mass[sum.block_of_position[row]] += std::norm(eig.vectors(row, col));
            }
            const int best =
                static_cast<int>(std::max_element(mass.begin(), mass.end()) - mass.begin());
            if (mass[best] <= 0.5) {
                throw NumericalError(
                    "eigenvector grouping ambiguous at gamma " + std::to_string(gamma) +
                    ": eigenvalue index " + std::to_string(col) +
                    " splits between blocks (near-degenerate cross-block eigenvalues)");
            }
            members[best].push_back(col);
        }
        for (int b = 0; b < k; ++b) {
            if (static_cast<int>(members[b].size()) != config.blocks[b].size) {
                throw NumericalError("block " + std::to_string(b) + " received " +
                                     std::to_string(members[b].size()) +
                                     " eigenvectors, expected " +
                                     std::to_string(config.blocks[b].size));
            }
        }

        CoalescenceSample sample;
        sample.gamma = gamma;
        sample.per_block_max_angle.resize(k, 0.0);
        for (int b = 0; b < k; ++b) {
            double max_angle = 0.0;
            for (size_t i = 0; i < members[b].size(); ++i) {
                for (size_t j = i + 1; j < members[b].size(); ++j) {
                    Complex overlap{0.0, 0.0};
                    for (int row = 0; row < n; ++row) {
                        overlap += std::conj(eig.vectors(row, members[b][i])) *
                                   eig.vectors(row, members[b][j]);
                    }
                    const double cosine = std::min(1.0, std::abs(overlap));
                    max_angle = std::max(max_angle, std::acos(cosine));
                }
            }
            sample.per_block_max_angle[b] = max_angle;
        }
        samples.push_back(std::move(sample));
    }
    return samples;
}

}  // namespace bhepn::epn
