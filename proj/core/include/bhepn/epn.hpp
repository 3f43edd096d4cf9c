#pragma once

#include <vector>

#include "bhepn/complex_matrix.hpp"
#include "bhepn/model.hpp"

namespace bhepn::epn {

/// EPN analysis result: how the degenerate zero eigenvalue is organized.
struct JordanReport {
    int dimension = 0;
    double eta = 0.0;  // the degenerate eigenvalue; PT-symmetry pins it to 0
    int geometric_multiplicity = 0;
    std::vector<int> segre;  // Jordan block sizes, nonincreasing
    ComplexMatrix transition_matrix;
    double residual = 0.0;  // relative Frobenius defect of H*Q - Q*J
    double condition_estimate = 0.0;
};

struct MultiplicityResult {
    int value = 0;
    /// ||h^n||_F / ||h||_F^n; above tol the input was not nilpotent and the
    /// kernel dimension is not an EPN multiplicity.
    double nilpotency_defect = 0.0;
    bool nilpotent = false;
};

/// dim ker(h) as n - numerical_rank(h, tol). The nilpotency gate is reported,
/// not enforced: computation proceeds with a warning flag.
MultiplicityResult geometric_multiplicity(const ComplexMatrix& h, double tol = 1e-8);

/// Jordan block sizes of a nilpotent matrix from the rank sequence
/// r_j = rank(h^j): the number of blocks of size >= j is r_{j-1} - r_j.
/// Throws NumericalError if the sequence is not monotone (numerical
/// breakdown) or never reaches zero (input not nilpotent).
std::vector<int> segre_characteristic(const ComplexMatrix& h, double tol = 1e-8);

/// Direct sum of nilpotent Jordan blocks of the given sizes.
ComplexMatrix jordan_matrix(const std::vector<int>& sizes);

/// Jordan chain v_1..v_m for a single nilpotent Jordan-block matrix:
/// h v_1 = 0, h v_{j+1} = v_j, minimum-norm solves, scaled so the first
/// largest-magnitude entry of v_1 is exactly 1.
std::vector<std::vector<Complex>> jordan_chain(const ComplexMatrix& h);

/// Builds the transition matrix Q with H(1) Q = Q J for an admissible config,
/// chains built block by block and permuted into the canonical basis.
/// Verifies the residual gate (1e-8 relative) and an invertibility gate
/// (sigma_min > 1e-8 sigma_max); failing either throws NumericalError.
JordanReport transition_matrix(const ModelConfig& config);

struct CoalescenceSample {
    double gamma = 0.0;
    /// max pairwise principal angle among eigenvectors of each block, radians
    std::vector<double> per_block_max_angle;
};

/// Eigenvector coalescence toward the EPN: for each gamma in [0, 1), group
/// eigenvectors of the canonical direct sum by dominant block support and
/// report the largest within-block pairwise angle.
std::vector<CoalescenceSample> coalescence_profile(const ModelConfig& config,
                                                   const std::vector<double>& gammas);

}  // namespace bhepn::epn
