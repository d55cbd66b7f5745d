// Copyright 2026 The discord_lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "discord_lab/correlations.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "discord_lab/errors.hpp"
#include "test_support.hpp"

namespace discord {
namespace {

using testing::kLog2_3;
using testing::kPi;

constexpr auto kProduct = MeasurementMode::product_local;
constexpr auto kJoint = MeasurementMode::joint;

// Reference minima from an independent numpy/scipy multistart minimization.
constexpr double kCounterexamplePair = 0.2017520733857;
constexpr double kWGhzGqdAt06 = 1.2093076941755752;
constexpr double kWGhzBlockAt07 = 0.8951344931241163;
constexpr double kWGhzPairAt05 = 0.32344817801899484;

using Sites = std::vector<std::size_t>;

double angle_of(const CorrelationReport& r, std::size_t part) {
    return std::get<QubitBasis>(r.argmin->parts().at(part).basis).theta;
}

TEST(Entropy, Examples) {
    EXPECT_NEAR(entropy(testing::basis_state(0, 1 + 1)), 0.0, 1e-12);
    EXPECT_NEAR(entropy(testing::qubit_diag(0.5)), 1.0, 1e-14);
    EXPECT_NEAR(entropy(testing::qubit_diag(2.0 / 3.0)), kLog2_3 - 2.0 / 3.0, 1e-14);
}

TEST(Entropy, BoundsAndUnitaryInvariance) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const auto rho = testing::random_qubit_state(n, rng);
        const double s = entropy(rho);
        EXPECT_GE(s, 0.0);
        EXPECT_LE(s, static_cast<double>(n) + 1e-12);
        const auto u = testing::random_unitary(rho.dimension(), rng);
        EXPECT_NEAR(entropy(rho.conjugated(u)), s, 1e-10);
    }
}

TEST(Entropy, ShannonCutoff) {
    const double p[] = {0.5, 0.5, 1e-13, 0.0};
    EXPECT_NEAR(shannon_entropy(p), 1.0, 1e-15);
}

TEST(MutualInformation, Examples) {
    std::mt19937_64 rng(52);
    const auto prod = testing::product(testing::random_qubit_state(1, rng), testing::random_qubit_state(1, rng));
    EXPECT_NEAR(mutual_information(prod), 0.0, 1e-12);
    EXPECT_NEAR(mutual_information(testing::bell_state()), 2.0, 1e-12);
    EXPECT_NEAR(mutual_information(ghz(3)), 3.0, 1e-12);
    EXPECT_THROW(mutual_information(testing::qubit_diag(0.5)), ArgumentError);
}

TEST(ConditionalEntropy, Examples) {
    const Sites a{0};
    const Sites b{1};
    EXPECT_NEAR(conditional_entropy(testing::bell_state(), a, b), -1.0, 1e-12);
    const auto rho_a = testing::qubit_diag(0.2);
    const auto prod = testing::product(rho_a, testing::qubit_diag(0.7));
    EXPECT_NEAR(conditional_entropy(prod, a, b), entropy(rho_a), 1e-12);
    const double classical[] = {0.5, 0.0, 0.0, 0.5};
    const DensityMatrix correlated(ComplexMatrix::diagonal(classical), SubsystemLayout::qubits(2));
    EXPECT_NEAR(conditional_entropy(correlated, a, b), 0.0, 1e-12);
    EXPECT_THROW(conditional_entropy(prod, a, a), ArgumentError);
    EXPECT_THROW(conditional_entropy(prod, Sites{}, b), ArgumentError);
}

TEST(LossOfCorrelation, GhzInZAndX) {
    const QubitBasis z[] = {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
    const QubitBasis x[] = {{kPi / 2, 0.0}, {kPi / 2, 0.0}, {kPi / 2, 0.0}};
    EXPECT_NEAR(loss_of_correlation(ghz(3), MeasurementScheme::product(z)), 1.0, 1e-12);
    EXPECT_NEAR(loss_of_correlation(ghz(3), MeasurementScheme::product(x)), 2.0, 1e-12);
}

TEST(LossOfCorrelation, ClassicalStateInEigenbasis) {
    std::mt19937_64 rng(53);
    const auto rho = testing::random_classical(3, rng);
    const QubitBasis z[] = {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
    EXPECT_NEAR(loss_of_correlation(rho, MeasurementScheme::product(z)), 0.0, 1e-12);
}

TEST(LossOfCorrelation, NonNegativeAndRoutesAgree) {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto rho = testing::random_qubit_state(n, rng, 1 + trial % 4);
        const auto scheme = MeasurementScheme::product(testing::random_bases(n, rng));
        const double fast = loss_of_correlation(rho, scheme);
        EXPECT_GE(fast, -1e-10);
        std::vector<std::vector<std::size_t>> singles;
        for (std::size_t k = 0; k < n; ++k) singles.push_back({k});
        EXPECT_NEAR(channel_party_loss(rho, singles, scheme), fast, 1e-10);
        const std::vector<std::vector<std::size_t>> cut{{0}, {}};
        std::vector<std::vector<std::size_t>> halves{{0}, {}};
        for (std::size_t k = 1; k < n; ++k) halves[1].push_back(k);
        EXPECT_NEAR(channel_party_loss(rho, halves, scheme), party_loss(rho, halves, scheme), 1e-10);
    }
}

TEST(LossOfCorrelation, SchemeMustCoverState) {
    const QubitBasis two[] = {{0.0, 0.0}, {0.0, 0.0}};
    EXPECT_THROW(loss_of_correlation(ghz(3), MeasurementScheme::product(two)), ArgumentError);
    const std::vector<std::vector<std::size_t>> overlapping{{0, 1}, {1}};
    EXPECT_THROW(party_loss(ghz(2), overlapping, MeasurementScheme::product(two)), ArgumentError);
}

TEST(OneSidedDiscord, ClassicalStateIsZero) {
    std::mt19937_64 rng(55);
    const auto rho = testing::random_classical(2, rng);
    const auto r = one_sided_discord(rho, Sites{0}, Sites{1}, kProduct, {});
    EXPECT_NEAR(r.value, 0.0, 1e-7);
    EXPECT_GE(r.value, 0.0);
}

TEST(OneSidedDiscord, BellIsOne) {
    EXPECT_NEAR(one_sided_discord(testing::bell_state(), Sites{0}, Sites{1}, kProduct, {}).value, 1.0, 1e-6);
}

TEST(OneSidedDiscord, CounterexampleDependsOnMeasuredSide) {
    const Sites ab{0, 1};
    const auto rho_ab = counterexample_state().marginal(ab);
    EXPECT_NEAR(one_sided_discord(rho_ab, Sites{1}, Sites{0}, kProduct, {}).value, 0.0, 1e-7);
    EXPECT_NEAR(one_sided_discord(rho_ab, Sites{0}, Sites{1}, kProduct, {}).value, kCounterexamplePair, 1e-6);
}

TEST(OneSidedDiscord, JointNeverWorseThanProduct) {
    std::mt19937_64 rng(56);
    const auto rho = testing::random_qubit_state(3, rng, 2);
    const double product = one_sided_discord(rho, Sites{0}, Sites{1, 2}, kProduct, {}).value;
    const double joint = one_sided_discord(rho, Sites{0}, Sites{1, 2}, kJoint, {}).value;
    EXPECT_LE(joint, product + 1e-4);
}

TEST(SymmetricDiscord, WPairIsAnalyticInXBasis) {
    const auto r = symmetric_discord(w3(), Sites{0}, Sites{1}, kProduct, {});
    EXPECT_EQ(r.quantity, Quantity::symmetric_discord);
    EXPECT_NEAR(r.value, testing::w_pairwise(), 1e-6);
    EXPECT_NEAR(angle_of(r, 0), kPi / 2, 1e-3);
    EXPECT_NEAR(angle_of(r, 1), kPi / 2, 1e-3);
    EXPECT_EQ(r.layout, SubsystemLayout::qubits(2));
}

TEST(SymmetricDiscord, GhzPairVanishes) {
    EXPECT_NEAR(symmetric_discord(ghz(3), Sites{0}, Sites{1}, kProduct, {}).value, 0.0, 1e-7);
}

TEST(SymmetricDiscord, CounterexamplePair) {
    const auto r = symmetric_discord(counterexample_state(), Sites{0}, Sites{1}, kProduct, {});
    EXPECT_NEAR(r.value, kCounterexamplePair, 1e-6);
}

TEST(SymmetricDiscord, CounterexamplePairOnTenthPiGrid) {
    // Restricting both polar angles to multiples of pi/10 (phi = 0) lands on 0.20398.
    const Sites ab{0, 1};
    const auto rho_ab = counterexample_state().marginal(ab);
    const std::vector<std::vector<std::size_t>> parties{{0}, {1}};
    const Axis axes[] = {{0.0, kPi, false, 0}, {0.0, kPi, false, 0}};
    auto objective = [&](std::span<const double> x) {
        const QubitBasis bases[] = {{x[0], 0.0}, {x[1], 0.0}};
        return party_loss(rho_ab, parties, MeasurementScheme::product(bases));
    };
    const auto coarse = grid_oracle(objective, axes, 11);
    EXPECT_NEAR(coarse.best_value, 0.203978, 1e-6);
    const auto fine = grid_oracle(objective, axes, 1001);
    EXPECT_NEAR(fine.best_value, kCounterexamplePair, 1e-6);
}

TEST(SymmetricDiscord, SwapSymmetry) {
    std::mt19937_64 rng(57);
    const std::size_t swap[] = {1, 0};
    for (int trial = 0; trial < 5; ++trial) {
        const auto rho = testing::random_qubit_state(2, rng, 2);
        const double ab = symmetric_discord(rho, Sites{0}, Sites{1}, kProduct, {}).value;
        const double ba = symmetric_discord(rho.permuted(swap), Sites{1}, Sites{0}, kProduct, {}).value;
        EXPECT_NEAR(ab, ba, 1e-4);
    }
}

TEST(SymmetricDiscord, OneSidedNeverExceedsSymmetric) {
    std::mt19937_64 rng(58);
    for (int trial = 0; trial < 8; ++trial) {
        const auto rho = testing::random_qubit_state(2, rng, 1 + trial % 4);
        const double one = one_sided_discord(rho, Sites{0}, Sites{1}, kProduct, {}).value;
        const double both = symmetric_discord(rho, Sites{0}, Sites{1}, kProduct, {}).value;
        EXPECT_LE(one, both + 1e-4) << trial;
    }
}

TEST(BlockDiscord, CounterexampleCuts) {
    const auto rho = counterexample_state();
    EXPECT_LT(block_discord(rho, Sites{0}, Sites{1, 2}, kJoint, {}).value, 1e-4);
    EXPECT_LT(block_discord(rho, Sites{0}, Sites{2}, kProduct, {}).value, 1e-7);
    // C in z already reveals which branch A is in, so product bases suffice too.
    EXPECT_LT(block_discord(rho, Sites{0}, Sites{1, 2}, kProduct, {}).value, 1e-7);
    const QubitBasis z[] = {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
    const std::vector<std::vector<std::size_t>> parties{{0}, {1, 2}};
    EXPECT_NEAR(party_loss(rho, parties, MeasurementScheme::product(z)), 0.0, 1e-12);
}

TEST(BlockDiscord, JointReportCarriesBlockBases) {
    const auto r = block_discord(counterexample_state(), Sites{0}, Sites{1, 2}, kJoint, {});
    ASSERT_TRUE(r.argmin.has_value());
    ASSERT_EQ(r.argmin->parts().size(), 2u);
    EXPECT_EQ(std::get<BlockBasis>(r.argmin->parts()[1].basis).dim, 4u);
    EXPECT_TRUE(r.diagnostics->converged);
}

TEST(BlockDiscord, WGhzBlockTermAwayFromComputationalBasis) {
    const auto r = block_discord(w_ghz_mixture(0.7), Sites{0, 1}, Sites{2}, kProduct, {});
    EXPECT_NEAR(r.value, kWGhzBlockAt07, 1e-6);
}

TEST(BlockDiscord, CutErrors) {
    const auto rho = ghz(3);
    EXPECT_THROW(block_discord(rho, Sites{0}, Sites{0, 1}, kProduct, {}), ArgumentError);
    EXPECT_THROW(block_discord(rho, Sites{}, Sites{1}, kProduct, {}), ArgumentError);
    EXPECT_THROW(block_discord(rho, Sites{0}, Sites{3}, kProduct, {}), ArgumentError);
    const DensityMatrix qutrits(ComplexMatrix::identity(9) * Complex(1.0 / 9.0), SubsystemLayout({3, 3}));
    EXPECT_THROW(block_discord(qutrits, Sites{0}, Sites{1}, kProduct, {}), LayoutError);
    EXPECT_NEAR(block_discord(qutrits, Sites{0}, Sites{1}, kJoint, {}).value, 0.0, 1e-7);
}

TEST(GlobalDiscord, GhzIsOneForEveryN) {
    for (std::size_t n = 2; n <= 4; ++n) EXPECT_NEAR(global_discord(ghz(n), {}).value, 1.0, 1e-6) << n;
}

TEST(GlobalDiscord, WIsLog3) { EXPECT_NEAR(global_discord(w3(), {}).value, kLog2_3, 1e-6); }

TEST(GlobalDiscord, Counterexample) {
    EXPECT_NEAR(global_discord(counterexample_state(), {}).value, kCounterexamplePair, 1e-6);
}

TEST(GlobalDiscord, WGhzReferencePoints) {
    EXPECT_NEAR(global_discord(w_ghz_mixture(0.6), {}).value, kWGhzGqdAt06, 1e-6);
    EXPECT_NEAR(symmetric_discord(w_ghz_mixture(0.5), Sites{0}, Sites{1}, kProduct, {}).value, kWGhzPairAt05, 1e-6);
}

TEST(GlobalDiscord, ClassicalDistributionsVanish) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 5; ++trial) {
        const auto r = global_discord(testing::random_classical(2 + trial % 2, rng), {});
        EXPECT_GE(r.value, 0.0);
        EXPECT_LT(r.value, 1e-7);
    }
}

TEST(GlobalDiscord, NonNegativeOnRandomStates) {
    std::mt19937_64 rng(60);
    for (int trial = 0; trial < 10; ++trial) {
        EXPECT_GE(global_discord(testing::random_qubit_state(2 + trial % 2, rng), {}).value, -1e-7);
    }
}

TEST(GlobalDiscord, LocalUnitaryInvariance) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 4; ++trial) {
        const auto rho = testing::random_qubit_state(3, rng, 2);
        const auto rotated = rho.conjugated(testing::random_local_unitary(3, rng));
        EXPECT_NEAR(global_discord(rho, {}).value, global_discord(rotated, {}).value, 2e-3);
    }
}

TEST(GlobalDiscord, SchmidtLaw) {
    for (double p1 : {0.1, 0.75}) {
        EXPECT_NEAR(global_discord(schmidt_state(p1, 3), {}).value, testing::binary_entropy(p1), 1e-6);
    }
}

TEST(GlobalDiscord, ReportShape) {
    const auto r = global_discord(ghz(3), {});
    EXPECT_EQ(r.quantity, Quantity::global_discord);
    ASSERT_TRUE(r.argmin.has_value());
    EXPECT_EQ(r.argmin->parts().size(), 3u);
    ASSERT_TRUE(r.diagnostics.has_value());
    EXPECT_EQ(r.diagnostics->starts, 10u);
    EXPECT_TRUE(r.diagnostics->converged);
    EXPECT_THROW(global_discord(testing::qubit_diag(0.5), {}), ArgumentError);
}

TEST(Quantity, Names) {
    for (auto q : {Quantity::entropy, Quantity::mutual_info, Quantity::conditional_entropy, Quantity::d_phi,
                   Quantity::one_sided_discord, Quantity::symmetric_discord, Quantity::block_discord,
                   Quantity::global_discord}) {
        EXPECT_EQ(parse_quantity(to_string(q)), q);
    }
    EXPECT_THROW(parse_quantity("negativity"), ArgumentError);
}

}  // namespace
}  // namespace discord
