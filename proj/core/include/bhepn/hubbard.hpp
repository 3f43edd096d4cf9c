#pragma once

#include <vector>

#include "bhepn/complex_matrix.hpp"
#include "bhepn/model.hpp"

namespace bhepn::hubbard {

/// The N-by-N tridiagonal BH block: diagonal i*gamma*(2j - N - 1) for row
/// j = 1..N, off-diagonals sqrt(j*(N-j)). N >= 2.
ComplexMatrix bh_block(int n, double gamma);

/// The fixed-boson-number sector of the two-mode Hamiltonian
///   (a1^+ a2 + a2^+ a1) - i*gamma*(a1^+ a1 - a2^+ a2)
/// built directly from ladder-operator matrix elements in the basis
/// |n1, n2>, n1 + n2 = n_bosons, ordered by decreasing n1. Serves as the
/// independent oracle for bh_block: fock_block(N-1, g) == bh_block(N, g).
ComplexMatrix fock_block(int n_bosons, double gamma);

/// scale * bh_block(size, gamma), entrywise.
ComplexMatrix scaled_block(const BlockSpec& spec, double gamma);

/// Direct sum of scaled blocks, conjugated into the canonical basis that
/// sorts diagonal entries by ascending imaginary coefficient (so the diagonal
/// matches bh_block(N, gamma) for admissible configs).
struct DirectSumResult {
    ComplexMatrix matrix;
    /// canonical position -> index in the unpermuted block-diagonal basis
    std::vector<int> permutation;
    /// block membership of each canonical position
    std::vector<int> block_of_position;
    bool admissible = false;
};

/// Builds the canonical direct-sum Hamiltonian. Inadmissible configs throw
/// unless allow_inadmissible is set, in which case the result is tagged.
DirectSumResult build_direct_sum(const ModelConfig& config, double gamma,
                                 bool allow_inadmissible = false);

/// Convenience wrapper returning just the matrix; throws on inadmissible input.
ComplexMatrix direct_sum_hamiltonian(const ModelConfig& config, double gamma);

/// The exact spectrum {n * sqrt(1 - gamma^2) : n in S(N)}, sorted ascending.
/// Requires |gamma| <= 1; beyond that the spectrum turns complex and is out
/// of scope here.
std::vector<double> closed_form_spectrum(int n, double gamma);

/// Exact spectrum of an arbitrary direct sum: union over blocks of
/// c_k * n * sqrt(1 - gamma^2), n in S(M_k). Sorted ascending.
std::vector<double> closed_form_spectrum(const ModelConfig& config, double gamma);

/// N-by-N antidiagonal unit matrix (the parity operator).
ComplexMatrix parity_matrix(int n);

struct SymmetryReport {
    bool complex_symmetric = false;
    bool pt_symmetric = false;
    double max_defect = 0.0;
};

/// Relative Frobenius defects of H = H^T and P conj(H) P = H, both gated at
/// 1e-12 relative.
SymmetryReport symmetry_report(const ComplexMatrix& m);

}  // namespace bhepn::hubbard
