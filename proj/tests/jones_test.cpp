// Copyright 2026 The jonesdqc1 Authors
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

#include "jonesdqc1/jones.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "jonesdqc1/errors.hpp"

using namespace jonesdqc1;

namespace {

constexpr double kPhi = std::numbers::phi;

BraidWord random_braid(std::mt19937 &rng, int m, int max_len) {
    int len = static_cast<int>(rng() % (max_len + 1));
    std::vector<int> w;
    for (int k = 0; k < len; k++) {
        int g = 1 + static_cast<int>(rng() % (m - 1));
        w.push_back(rng() % 2 ? g : -g);
    }
    return BraidWord(m, w);
}

}  // namespace

TEST(jones, golden_constants) {
    const double phi = GoldenConstants::phi;
    EXPECT_NEAR(phi * phi, phi + 1, 1e-12);
    EXPECT_NEAR(phi, (1 + std::sqrt(5.0)) / 2, 1e-15);
    const Complex t = GoldenConstants::t();
    EXPECT_LE(std::abs(t * t * t * t * t - 1.0), 1e-12);
    EXPECT_LE(std::abs(GoldenConstants::t_power(-3) - t * t), 1e-15);
    EXPECT_LE(std::abs(GoldenConstants::t_power(12) - t * t), 1e-15);
}

TEST(jones, kappa_examples) {
    EXPECT_NEAR(kappa(3, 4), kPhi + 2, 1e-12);
    EXPECT_NEAR(kappa(3, 4), 3.618034, 1e-6);
    EXPECT_EQ(kappa(1, 2), 0.0);
    EXPECT_NEAR(kappa(4, 5), 3 * kPhi + 5, 1e-12);
    EXPECT_THROW(kappa(2, 4), DomainError);
    EXPECT_THROW(kappa(3, 6), DomainError);
}

TEST(jones, writhe_phase_matches_direct_power) {
    const Complex t = GoldenConstants::t();
    const Complex base = -(t * t * t * t);
    for (int w = -9; w <= 9; w++) {
        Complex direct = 1.0;
        for (int k = 0; k < std::abs(3 * w); k++) {
            direct *= w >= 0 ? base : 1.0 / base;
        }
        EXPECT_LE(std::abs(writhe_phase(w) - direct), 1e-12) << w;
    }
}

TEST(jones, jones_from_m_examples) {
    auto id = jones_from_m(1.0, 0, 3, 4);
    EXPECT_LE(std::abs(id.value - Complex(2 * kPhi + 1)), 1e-12);
    EXPECT_NEAR(id.value.real(), 4.236068, 1e-6);
    EXPECT_NEAR(id.kappa, kPhi + 2, 1e-12);
    EXPECT_LE(std::abs(id.wtr_full - Complex(4 * (1 + kPhi))), 1e-12);

    const Complex root = kappa(3, 4) / (4 * (1 + kPhi));
    for (int w : {-3, 0, 2, 7}) {
        EXPECT_LE(std::abs(jones_from_m(root, w, 3, 4).value), 1e-12);
    }
}

TEST(jones, eval_exact_examples) {
    auto unknot = eval_exact(BraidWord(4, {1, 2, 3}));
    EXPECT_LE(std::abs(unknot.value - 1.0), 1e-9);
    EXPECT_EQ(unknot.writhe, 3);
    EXPECT_EQ(unknot.register_qubits, 3);

    auto id = eval_exact(BraidWord(4, {}));
    EXPECT_LE(std::abs(id.value - Complex(2 * kPhi + 1)), 1e-9);
    EXPECT_LE(std::abs(eval_exact(BraidWord(4, {1, -1})).value - id.value), 1e-9);

    // m strands, empty word: phi^(m-1).
    for (int m = 2; m <= 7; m++) {
        EXPECT_LE(std::abs(eval_exact(BraidWord(m, {})).value - std::pow(kPhi, m - 1)), 1e-9) << m;
    }
    EXPECT_THROW(eval_exact(BraidWord(1, {})), DomainError);
}

TEST(jones, exact_mode_consistency_and_bound) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 150; trial++) {
        int m = 2 + static_cast<int>(rng() % 5);
        auto b = random_braid(rng, m, 6);
        auto r = eval_exact(b);
        auto basis = enumerate_fib_basis(m);
        EXPECT_LE(std::abs(r.wtr_full - r.kappa - weighted_trace(braid_unitary(b, basis), basis)), 1e-9);
        EXPECT_LE(r.magnitude(), std::pow(kPhi, m) + 1e-9);
    }
}

TEST(jones, invariant_under_braid_relations) {
    for (int len = 2; len <= 4; len++) {
        for (const auto &w : enumerate_words(4, len)) {
            const Complex v = eval_exact(w).value;
            for (const auto &r : relation_rewrites(w)) {
                EXPECT_LE(std::abs(eval_exact(r).value - v), 1e-9) << w.str() << " -> " << r.str();
            }
        }
    }
}

TEST(jones, invariant_under_cyclic_rotation) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; trial++) {
        int m = 2 + static_cast<int>(rng() % 4);
        auto b = random_braid(rng, m, 6);
        const Complex v = eval_exact(b).value;
        auto w = b.word();
        for (size_t k = 1; k < w.size(); k++) {
            std::rotate(w.begin(), w.begin() + 1, w.end());
            EXPECT_LE(std::abs(eval_exact(BraidWord(m, w)).value - v), 1e-9);
        }
    }
}

TEST(jones, invariant_under_cancelling_pair_insertion) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; trial++) {
        int m = 2 + static_cast<int>(rng() % 4);
        auto b = random_braid(rng, m, 5);
        const Complex v = eval_exact(b).value;
        int g = 1 + static_cast<int>(rng() % (m - 1));
        for (size_t pos = 0; pos <= b.size(); pos++) {
            auto w = b.word();
            w.insert(w.begin() + pos, {g, -g});
            EXPECT_LE(std::abs(eval_exact(BraidWord(m, w)).value - v), 1e-9);
        }
    }
}

TEST(jones, eval_dqc1_noiseless) {
    auto r = eval_dqc1(BraidWord(4, {1, 2, 3}), 1.0, std::nullopt, 1);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_LE(std::abs(r[0].value - 1.0), 1e-9);
    EXPECT_THROW(eval_dqc1(BraidWord(4, {1}), 1.0, std::nullopt, 3), DomainError);

    NoiseModel perfect;
    perfect.gate_fidelity = 1.0;
    perfect.readout_noise_std = 0.0;
    BraidWord b(4, {2, -3, 1});
    auto exact = eval_exact(b).value;
    for (const auto &x : eval_dqc1(b, 0.4, perfect, 6)) {
        EXPECT_LE(std::abs(x.value - exact), 1e-9);
    }
}

TEST(jones, noisy_cloud_means_stay_near_exact) {
    // Worst case measured once over all 216 words at default knobs: 0.165.
    constexpr double kFrozenBound = 0.17;
    NoiseModel nm;
    nm.gate_fidelity = 0.99;
    double worst = 0.0;
    for (const auto &w : enumerate_words(4, 3)) {
        auto cloud = eval_dqc1(w, 1.0, nm, 200);
        Complex mean = 0.0;
        for (const auto &r : cloud) {
            mean += r.value;
        }
        mean /= static_cast<double>(cloud.size());
        worst = std::max(worst, std::abs(mean - eval_exact(w).value));
    }
    EXPECT_LE(worst, kFrozenBound);
    EXPECT_GT(worst, 0.0);
}

TEST(jones, json_and_csv_records) {
    BraidWord b(4, {});
    auto r = eval_exact(b);
    auto json = result_to_json(b, r);
    EXPECT_NE(json.find(R"("braid":"")"), std::string::npos);
    EXPECT_NE(json.find(R"("n":3)"), std::string::npos);
    EXPECT_NE(json.find("\"v_re\":4.23606797749979"), std::string::npos);
    auto csv = results_to_csv({{BraidWord(4, {1, -2}), eval_exact(BraidWord(4, {1, -2}))}});
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "braid,strands,writhe,n,kappa,m_re,m_im,v_re,v_im,v_abs,v_arg");
    EXPECT_EQ(csv.substr(csv.find('\n') + 1, 10), "\"1 -2\",4,0");
}
