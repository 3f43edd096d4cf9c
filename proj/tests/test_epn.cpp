#include <doctest.h>

#include <cmath>

#include "bhepn/classify.hpp"
#include "bhepn/epn.hpp"
#include "bhepn/hubbard.hpp"
#include "bhepn/linalg.hpp"
#include "test_helpers.hpp"

using namespace bhepn;
using doctest::Approx;

namespace {
const Complex kI{0.0, 1.0};
}

TEST_CASE("geometric multiplicity at the EPN") {
    const auto single = epn::geometric_multiplicity(hubbard::bh_block(6, 1.0));
    CHECK(single.value == 1);
    CHECK(single.nilpotent);

    const auto k2 = epn::geometric_multiplicity(
        hubbard::direct_sum_hamiltonian(ModelConfig::make(4, {2, 2}, {1, 3}), 1.0));
    CHECK(k2.value == 2);

    const auto k3 = epn::geometric_multiplicity(
        hubbard::direct_sum_hamiltonian(ModelConfig::make(6, {2, 2, 2}, {1, 3, 5}), 1.0));
    CHECK(k3.value == 3);
}

TEST_CASE("non-nilpotent input is flagged, not rejected") {
    const auto away_from_epn = epn::geometric_multiplicity(hubbard::bh_block(4, 0.5));
    CHECK_FALSE(away_from_epn.nilpotent);
    CHECK(away_from_epn.nilpotency_defect > 1e-8);
    CHECK(away_from_epn.value == 0);  // full rank below the EPN
}

TEST_CASE("Segre characteristic from the rank sequence") {
    CHECK(epn::segre_characteristic(hubbard::bh_block(5, 1.0)) == std::vector<int>{5});
    CHECK(epn::segre_characteristic(hubbard::direct_sum_hamiltonian(
              ModelConfig::make(7, {3, 2, 2}, {1, 4, 6}), 1.0)) ==
          std::vector<int>{3, 2, 2});
    CHECK(epn::segre_characteristic(ComplexMatrix(3, 3)) == std::vector<int>{1, 1, 1});
}

TEST_CASE("Segre characteristic rejects non-nilpotent input") {
    CHECK_THROWS_AS(epn::segre_characteristic(hubbard::bh_block(4, 0.3)), NumericalError);
}

TEST_CASE("rank sequence of a single Jordan block steps down by one") {
    const ComplexMatrix h = hubbard::bh_block(5, 1.0);
    ComplexMatrix power = ComplexMatrix::identity(5);
    const auto base = linalg::svd(h);
    double cutoff = 1.0;
    for (int j = 1; j <= 5; ++j) {
        power = matmul(power, h);
        cutoff *= base.singular_values[0];
        const auto dec = linalg::svd(power);
        int rank = 0;
        for (double s : dec.singular_values) {
            if (s > 1e-8 * cutoff) ++rank;
        }
        CHECK(rank == 5 - j);
    }
}

TEST_CASE("jordan_matrix layout") {
    const ComplexMatrix j = epn::jordan_matrix({3, 2});
    CHECK(j.rows() == 5);
    CHECK(j(0, 1) == Complex{1.0, 0.0});
    CHECK(j(1, 2) == Complex{1.0, 0.0});
    CHECK(j(2, 3) == Complex{0.0, 0.0});  // no coupling across blocks
    CHECK(j(3, 4) == Complex{1.0, 0.0});
    CHECK(frobenius_norm(matmul(j, matmul(j, j))) == Approx(0.0));
}

TEST_CASE("jordan chain of the smallest block") {
    const ComplexMatrix h = hubbard::bh_block(2, 1.0);
    const auto chain = epn::jordan_chain(h);
    REQUIRE(chain.size() == 2);
    CHECK(std::abs(chain[0][0] - Complex{1.0, 0.0}) <= 1e-14);
    CHECK(std::abs(chain[0][1] - kI) <= 1e-14);

    ComplexMatrix v2(2, 1);
    v2(0, 0) = chain[1][0];
    v2(1, 0) = chain[1][1];
    const ComplexMatrix hv2 = matmul(h, v2);
    CHECK(std::abs(hv2(0, 0) - chain[0][0]) <= 1e-14);
    CHECK(std::abs(hv2(1, 0) - chain[0][1]) <= 1e-14);
}

TEST_CASE("scaling covariance: c^-j v_j is a chain for the scaled block") {
    const int m = 4;
    const int scale = 3;
    const auto chain = epn::jordan_chain(hubbard::bh_block(m, 1.0));
    const ComplexMatrix scaled = hubbard::scaled_block({m, scale}, 1.0);

    std::vector<std::vector<Complex>> rescaled(chain.size());
    double factor = 1.0 / scale;
    for (size_t j = 0; j < chain.size(); ++j) {
        for (Complex entry : chain[j]) rescaled[j].push_back(entry * factor);
        factor /= scale;
    }

    ComplexMatrix v1(m, 1);
    for (int i = 0; i < m; ++i) v1(i, 0) = rescaled[0][i];
    CHECK(frobenius_norm(matmul(scaled, v1)) <= 1e-12);
    for (size_t j = 1; j < rescaled.size(); ++j) {
        ComplexMatrix vj(m, 1), prev(m, 1);
        for (int i = 0; i < m; ++i) {
            vj(i, 0) = rescaled[j][i];
            prev(i, 0) = rescaled[j - 1][i];
        }
        CHECK(frobenius_norm(matmul(scaled, vj) - prev) <= 1e-12);
    }
}

TEST_CASE("jordan chain rejects blocks away from the EPN") {
    CHECK_THROWS_AS(epn::jordan_chain(hubbard::bh_block(3, 0.4)), NumericalError);
}

TEST_CASE("transition matrix for the N=2 block") {
    const auto report = epn::transition_matrix(ModelConfig::single_block(2));
    CHECK(report.dimension == 2);
    CHECK(report.eta == 0.0);
    CHECK(report.geometric_multiplicity == 1);
    CHECK(report.segre == std::vector<int>{2});
    CHECK(report.residual <= 1e-12);
    CHECK(report.condition_estimate < 1e4);

    // One valid transition matrix by hand: H [[1,0],[i,1]] = [[1,0],[i,1]] J.
    const ComplexMatrix h = hubbard::bh_block(2, 1.0);
    const ComplexMatrix q = ComplexMatrix::from_rows({{1.0, 0.0}, {kI, 1.0}});
    const ComplexMatrix j = epn::jordan_matrix({2});
    CHECK(frobenius_norm(matmul(h, q) - matmul(q, j)) <= 1e-15);
}

TEST_CASE("transition matrix for the K=2 pair of doublets") {
    const auto report = epn::transition_matrix(ModelConfig::make(4, {2, 2}, {1, 3}));
    CHECK(report.geometric_multiplicity == 2);
    CHECK(report.segre == std::vector<int>{2, 2});
    CHECK(report.residual <= 1e-8);

    const ComplexMatrix h =
        hubbard::direct_sum_hamiltonian(ModelConfig::make(4, {2, 2}, {1, 3}), 1.0);
    const ComplexMatrix defect = matmul(h, report.transition_matrix) -
                                 matmul(report.transition_matrix, epn::jordan_matrix(report.segre));
    CHECK(frobenius_norm(defect) <=
          1e-8 * frobenius_norm(h) * frobenius_norm(report.transition_matrix));
}

TEST_CASE("unpartitioned blocks give a single Jordan block") {
    for (int n = 3; n <= 8; ++n) {
        const auto report = epn::transition_matrix(ModelConfig::single_block(n));
        CHECK(report.geometric_multiplicity == 1);
        CHECK(report.segre == std::vector<int>{n});
        CHECK(report.residual <= 1e-8);
    }
}

TEST_CASE("transition matrices verify for every admissible model up to N=9") {
    for (int n = 2; n <= 9; ++n) {
        for (const ModelConfig& config : classify::enumerate_models(n)) {
            const auto report = epn::transition_matrix(config);
            CHECK(report.residual <= 1e-8);
            CHECK(report.segre == config.partition());
        }
    }
}

TEST_CASE("the N=10 single chain is too ill-conditioned for the gate") {
    // cond(Q) >= ||H(1)^9||_2 = 9! * 2^9 for any valid chain basis, which
    // exceeds the 1e8 invertibility gate; the constructor must refuse.
    CHECK_THROWS_AS(epn::transition_matrix(ModelConfig::single_block(10)), NumericalError);
}

TEST_CASE("EPN nilpotency across the catalogue") {
    for (int n = 2; n <= 12; ++n) {
        for (const ModelConfig& config : classify::enumerate_models(n)) {
            const auto mult = epn::geometric_multiplicity(
                hubbard::direct_sum_hamiltonian(config, 1.0));
            CHECK(mult.nilpotency_defect <= 1e-6);
            CHECK(mult.value == config.multiplicity());
        }
    }
}

TEST_CASE("coalescence profile collapses toward the EPN") {
    const ModelConfig config = ModelConfig::make(4, {2, 2}, {1, 3});
    const auto samples = epn::coalescence_profile(config, {0.0, 0.9, 0.99, 0.999});
    REQUIRE(samples.size() == 4);
    for (double angle : samples[0].per_block_max_angle) {
        CHECK(angle > 0.1);  // distinct eigenvectors well below the EPN
    }
    for (size_t s = 2; s < samples.size(); ++s) {
        for (size_t b = 0; b < samples[s].per_block_max_angle.size(); ++b) {
            CHECK(samples[s].per_block_max_angle[b] <
                  samples[s - 1].per_block_max_angle[b]);
        }
    }
}

TEST_CASE("K=1 coalescence funnels all eigenvectors together") {
    const auto samples =
        epn::coalescence_profile(ModelConfig::single_block(3), {0.9, 0.99, 0.999});
    REQUIRE(samples.size() == 3);
    for (size_t s = 1; s < samples.size(); ++s) {
        CHECK(samples[s].per_block_max_angle[0] < samples[s - 1].per_block_max_angle[0]);
    }
    CHECK(samples.back().per_block_max_angle[0] < 0.1);
}

TEST_CASE("coalescence profile validates the gamma range") {
    const ModelConfig config = ModelConfig::single_block(3);
    CHECK_THROWS_AS(epn::coalescence_profile(config, {1.0}), ConfigError);
    CHECK_THROWS_AS(epn::coalescence_profile(config, {-0.1}), ConfigError);
}
