#include <doctest.h>

#include <cmath>

#include "bhepn/hubbard.hpp"
#include "bhepn/linalg.hpp"
#include "test_helpers.hpp"

using namespace bhepn;
using doctest::Approx;

namespace {
const Complex kI{0.0, 1.0};
}

TEST_CASE("matmul basics") {
    const ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    const ComplexMatrix prod = matmul(ComplexMatrix::identity(2), m);
    CHECK(frobenius_norm(prod - m) == Approx(0.0));

    const ComplexMatrix nil = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    CHECK(frobenius_norm(matmul(nil, nil)) == Approx(0.0));

    // [[-i,1],[1,i]] squares to zero by hand multiplication.
    const ComplexMatrix h2 = hubbard::bh_block(2, 1.0);
    CHECK(frobenius_norm(matmul(h2, h2)) == Approx(0.0));
}

TEST_CASE("matmul rejects mismatched shapes, naming both") {
    const ComplexMatrix a(2, 3);
    const ComplexMatrix b(2, 2);
    try {
        matmul(a, b);
        FAIL("expected DimensionError");
    } catch (const DimensionError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("2x3") != std::string::npos);
        CHECK(msg.find("2x2") != std::string::npos);
    }
}

TEST_CASE("frobenius norm") {
    CHECK(frobenius_norm(ComplexMatrix(3, 3)) == Approx(0.0));
    CHECK(frobenius_norm(ComplexMatrix::identity(7)) == Approx(std::sqrt(7.0)));
    CHECK(frobenius_norm(hubbard::bh_block(2, 1.0)) == Approx(2.0));
}

TEST_CASE("eigenvalues of a diagonal matrix") {
    ComplexMatrix d(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    d(2, 2) = 3.0;
    const auto values = testing::sorted_eigs(linalg::eigenvalues(d));
    for (int i = 0; i < 3; ++i) {
        CHECK(values[i].real() == Approx(i + 1.0).epsilon(1e-12));
        CHECK(values[i].imag() == Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("eigenvalues at the N=2 exceptional point are exactly degenerate") {
    const auto values = linalg::eigenvalues(hubbard::bh_block(2, 1.0));
    REQUIRE(values.size() == 2);
    CHECK(std::abs(values[0]) <= 2e-10);
    CHECK(std::abs(values[1]) <= 2e-10);
}

TEST_CASE("eigenvalues of H(3)(0.6) follow the closed form") {
    const auto values = testing::sorted_eigs(linalg::eigenvalues(hubbard::bh_block(3, 0.6)));
    const double expected[] = {-1.6, 0.0, 1.6};
    for (int i = 0; i < 3; ++i) {
        CHECK(values[i].real() == Approx(expected[i]).epsilon(1e-10));
        CHECK(std::abs(values[i].imag()) <= 1e-10);
    }
}

TEST_CASE("eigenvalues input validation") {
    CHECK_THROWS_AS(linalg::eigenvalues(ComplexMatrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(linalg::eigenvalues(ComplexMatrix(65, 65)), DimensionError);
}

TEST_CASE("eigenvalue sum equals trace") {
    for (unsigned seed : {11u, 12u, 13u}) {
        const int n = 3 + static_cast<int>(seed % 3) * 5;
        const ComplexMatrix m = testing::random_matrix(n, seed);
        Complex trace{0.0, 0.0};
        for (int i = 0; i < n; ++i) trace += m(i, i);
        Complex sum{0.0, 0.0};
        for (Complex v : linalg::eigenvalues(m)) sum += v;
        CHECK(std::abs(sum - trace) <= 1e-9 * frobenius_norm(m));
    }
}

TEST_CASE("eigenvalue multiset is invariant under permutation similarity") {
    for (unsigned seed : {3u, 17u, 59u}) {
        const int n = 10;
        const ComplexMatrix m = testing::random_matrix(n, seed);
        const ComplexMatrix p = testing::random_permutation(n, seed + 1000);
        const ComplexMatrix similar = matmul(matmul(p.transpose(), m), p);

        const auto original = testing::sorted_eigs(linalg::eigenvalues(m));
        const auto permuted = testing::sorted_eigs(linalg::eigenvalues(similar));
        for (int i = 0; i < n; ++i) {
            CHECK(std::abs(original[i] - permuted[i]) <= 1e-8);
        }
    }
}

TEST_CASE("eigen decomposition produces genuine right eigenvectors") {
    for (const ComplexMatrix& m :
         {testing::random_matrix(8, 77u), hubbard::bh_block(5, 0.3)}) {
        const auto eig = linalg::eigen_decompose(m);
        const int n = m.rows();
        for (int col = 0; col < n; ++col) {
            ComplexMatrix v(n, 1);
            for (int i = 0; i < n; ++i) v(i, 0) = eig.vectors(i, col);
            ComplexMatrix defect = matmul(m, v);
            defect -= [&] {
                ComplexMatrix scaled = v;
                scaled *= eig.values[col];
                return scaled;
            }();
            CHECK(frobenius_norm(defect) <= 1e-10 * frobenius_norm(m));
        }
    }
}

TEST_CASE("svd reconstructs and is unitary") {
    for (unsigned seed : {5u, 6u}) {
        const ComplexMatrix m = testing::random_matrix(9, seed);
        const auto dec = linalg::svd(m);
        ComplexMatrix sigma(9, 9);
        for (int i = 0; i < 9; ++i) sigma(i, i) = dec.singular_values[i];
        const ComplexMatrix rebuilt = matmul(matmul(dec.u, sigma), dec.v.adjoint());
        CHECK(frobenius_norm(rebuilt - m) <= 1e-13 * frobenius_norm(m));
        CHECK(frobenius_norm(matmul(dec.u.adjoint(), dec.u) - ComplexMatrix::identity(9)) <=
              1e-13);
        CHECK(frobenius_norm(matmul(dec.v.adjoint(), dec.v) - ComplexMatrix::identity(9)) <=
              1e-13);
        for (size_t i = 1; i < dec.singular_values.size(); ++i) {
            CHECK(dec.singular_values[i] <= dec.singular_values[i - 1]);
        }
    }
}

TEST_CASE("numerical rank") {
    CHECK(linalg::numerical_rank(ComplexMatrix(3, 3), 1e-8) == 0);
    CHECK(linalg::numerical_rank(ComplexMatrix::identity(4), 1e-8) == 4);
    CHECK_THROWS_AS(linalg::numerical_rank(ComplexMatrix::identity(2), 0.0), DimensionError);

    // The gamma=1 BH block is a single nilpotent Jordan block: rank N-1.
    const ComplexMatrix h4 = hubbard::bh_block(4, 1.0);
    CHECK(linalg::numerical_rank(h4, 1e-8) == 3);
    CHECK(testing::row_reduction_rank(h4, 1e-8) == 3);
}

TEST_CASE("rank plus nullity equals dimension") {
    for (unsigned seed : {21u, 22u, 23u}) {
        const int n = 6;
        // Rank-3 product of 6x3 factors.
        const ComplexMatrix full = testing::random_matrix(n, seed);
        ComplexMatrix left(n, 3), right(3, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < 3; ++j) {
                left(i, j) = full(i, j);
                right(j, i) = full(j, i);
            }
        const ComplexMatrix m = matmul(left, right);
        const auto dec = linalg::svd(m);
        const double cutoff = 1e-8 * dec.singular_values.front();
        int nullity = 0;
        for (double s : dec.singular_values) {
            if (s <= cutoff) ++nullity;
        }
        CHECK(linalg::numerical_rank(m, 1e-8) + nullity == n);
        CHECK(linalg::numerical_rank(m, 1e-8) == 3);
        CHECK(testing::row_reduction_rank(m, 1e-8) == 3);
    }
}

TEST_CASE("solve returns the identity solution") {
    ComplexMatrix rhs(3, 1);
    rhs(0, 0) = Complex{1.0, 2.0};
    rhs(1, 0) = Complex{-0.5, 0.0};
    rhs(2, 0) = Complex{0.0, -3.0};
    const ComplexMatrix x = linalg::solve(ComplexMatrix::identity(3), rhs);
    CHECK(frobenius_norm(x - rhs) <= 1e-14);
}

TEST_CASE("solve picks the minimum-norm particular solution on a singular system") {
    const ComplexMatrix h2 = hubbard::bh_block(2, 1.0);
    ComplexMatrix rhs(2, 1);
    rhs(0, 0) = 1.0;
    rhs(1, 0) = kI;
    const ComplexMatrix x = linalg::solve(h2, rhs);

    CHECK(frobenius_norm(matmul(h2, x) - rhs) <=
          1e-9 * frobenius_norm(h2) * frobenius_norm(x));
    // (0, 1)^T is a valid particular solution; minimum norm must not exceed it
    // and must be orthogonal to the kernel span{(1, i)}.
    CHECK(frobenius_norm(x) <= 1.0 + 1e-12);
    const Complex kernel_overlap = std::conj(Complex{1.0, 0.0}) * x(0, 0) +
                                   std::conj(kI) * x(1, 0);
    CHECK(std::abs(kernel_overlap) <= 1e-12);
}

TEST_CASE("solve rejects inconsistent systems") {
    const ComplexMatrix nil = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    ComplexMatrix rhs(2, 1);
    rhs(1, 0) = 1.0;  // outside the range span{(1,0)}
    CHECK_THROWS_AS(linalg::solve(nil, rhs), NumericalError);
}

TEST_CASE("solve round-trips on consistent rank-deficient systems") {
    for (unsigned seed : {31u, 32u}) {
        const int n = 5;
        const ComplexMatrix full = testing::random_matrix(n, seed);
        ComplexMatrix left(n, 2), right(2, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < 2; ++j) {
                left(i, j) = full(i, j);
                right(j, i) = full(j + 2, i);
            }
        const ComplexMatrix a = matmul(left, right);
        const ComplexMatrix rhs = matmul(a, testing::random_matrix(n, seed + 7));
        const ComplexMatrix x = linalg::solve(a, rhs);
        CHECK(frobenius_norm(matmul(a, x) - rhs) <=
              1e-9 * frobenius_norm(a) * frobenius_norm(x));
    }
}
