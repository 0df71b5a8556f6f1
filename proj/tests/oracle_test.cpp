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

#include "jonesdqc1/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "jonesdqc1/errors.hpp"
#include "jonesdqc1/jones.hpp"

using namespace jonesdqc1;

namespace {

using cd = std::complex<double>;
constexpr double kPhi = std::numbers::phi;

/// Bracket of the closure of s1^k on two strands by expanding in the
/// Temperley-Lieb basis {1, E}: s1^{+-1} = A^{+-1} 1 + A^{-+1} E, E^2 = d E,
/// closure(1) = d, closure(E) = 1 (normalized so the unknot is 1).
cd two_strand_bracket(int k, cd a) {
    const cd d = -a * a - 1.0 / (a * a);
    const cd x = k >= 0 ? a : 1.0 / a;
    const cd y = 1.0 / x;
    cd one = 1.0, e = 0.0;
    for (int j = 0; j < std::abs(k); j++) {
        // (one + e E)(x + y E) = one x + (one y + e x + e y d) E
        cd next_one = one * x;
        cd next_e = one * y + e * x + e * y * d;
        one = next_one;
        e = next_e;
    }
    return one * d + e;
}

}  // namespace

TEST(oracle, standard_config) {
    auto cfg = OracleConfig::standard();
    EXPECT_LE(std::abs(cfg.d() - kPhi), 1e-12);
    EXPECT_LE(std::abs(cfg.t() - GoldenConstants::t()), 1e-12);
}

TEST(oracle, identity_braid_is_unlink) {
    auto cfg = OracleConfig::standard();
    for (int m = 1; m <= 6; m++) {
        EXPECT_LE(std::abs(kauffman_bracket(BraidWord(m, {}), cfg) - std::pow(cfg.d(), m - 1)), 1e-12);
    }
    EXPECT_LE(std::abs(jones_oracle(BraidWord(4, {})) - std::pow(kPhi, 3)), 1e-12);
    EXPECT_NEAR(jones_oracle(BraidWord(4, {})).real(), 4.236068, 1e-6);
}

TEST(oracle, single_crossing_kink) {
    // Positive crossing: the A-smoothing keeps both strands (two loops), the
    // B-smoothing joins them (one loop): A d + A^-1 = -A^3.
    const cd a = OracleConfig::standard().a;
    const cd d = OracleConfig::standard().d();
    EXPECT_LE(std::abs(kauffman_bracket(BraidWord(2, {1})) - (a * d + 1.0 / a)), 1e-12);
    EXPECT_LE(std::abs(kauffman_bracket(BraidWord(2, {1})) + a * a * a), 1e-12);
    EXPECT_LE(std::abs(kauffman_bracket(BraidWord(2, {-1})) + 1.0 / (a * a * a)), 1e-12);
}

TEST(oracle, trefoil_closed_form) {
    for (cd a : {OracleConfig::standard().a, std::polar(1.0, 0.37), cd(1.3, -0.4)}) {
        OracleConfig cfg{a};
        const cd closed = -std::pow(a, 5) - std::pow(a, -3) + std::pow(a, -7);
        EXPECT_LE(std::abs(kauffman_bracket(BraidWord(2, {1, 1, 1}), cfg) - closed), 1e-12);
    }
}

TEST(oracle, two_strand_torus_links_match_recursive_expansion) {
    for (cd a : {OracleConfig::standard().a, std::polar(1.0, 1.1), cd(0.8, 0.3)}) {
        OracleConfig cfg{a};
        for (int k = -8; k <= 8; k++) {
            std::vector<int> w(std::abs(k), k >= 0 ? 1 : -1);
            EXPECT_LE(std::abs(kauffman_bracket(BraidWord(2, w), cfg) - two_strand_bracket(k, a)), 1e-9) << k;
        }
    }
}

TEST(oracle, union_find_and_traced_loop_counts_agree) {
    for (int m = 2; m <= 4; m++) {
        for (int len = 0; len <= 3; len++) {
            for (const auto &w : enumerate_words(m, len)) {
                for (std::uint64_t s = 0; s < (std::uint64_t{1} << len); s++) {
                    auto state = planar_state(m, w.word(), s);
                    EXPECT_EQ(state.smoothing_choices, s);
                    EXPECT_EQ(state.loop_count, traced_loop_count(m, w.word(), s)) << w.str() << " state " << s;
                    EXPECT_GE(state.loop_count, 1);
                }
            }
        }
    }
}

TEST(oracle, unknot_presentations) {
    EXPECT_LE(std::abs(jones_oracle(BraidWord(1, {})) - 1.0), 1e-12);
    EXPECT_LE(std::abs(jones_oracle(BraidWord(2, {1})) - 1.0), 1e-12);
    EXPECT_LE(std::abs(jones_oracle(BraidWord(2, {-1})) - 1.0), 1e-12);
    EXPECT_LE(std::abs(jones_oracle(BraidWord(4, {1, 2, 3})) - 1.0), 1e-12);
    EXPECT_LE(std::abs(jones_oracle(BraidWord(4, {-3, 2, -1})) - 1.0), 1e-12);
}

TEST(oracle, mirror_pairs_conjugate) {
    for (const auto &w : enumerate_words(4, 3)) {
        std::vector<int> mirrored;
        for (int g : w.word()) {
            mirrored.push_back(-g);
        }
        EXPECT_LE(std::abs(jones_oracle(w) - std::conj(jones_oracle(BraidWord(4, mirrored)))), 1e-12) << w.str();
    }
}

TEST(oracle, component_count_examples) {
    EXPECT_EQ(component_count(BraidWord(4, {1, 2, 3})), 1);
    EXPECT_EQ(component_count(BraidWord(4, {})), 4);
    EXPECT_EQ(component_count(BraidWord(4, {1, 1, 1})), 3);
    EXPECT_EQ(component_count(BraidWord(2, {1, 1})), 2);
}

TEST(oracle, invariant_under_rotation_and_rewrites) {
    for (int len = 1; len <= 4; len++) {
        for (const auto &w : enumerate_words(4, len)) {
            const cd v = jones_oracle(w);
            auto rotated = w.word();
            std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
            EXPECT_LE(std::abs(jones_oracle(BraidWord(4, rotated)) - v), 1e-9);
            for (const auto &r : relation_rewrites(w)) {
                EXPECT_LE(std::abs(jones_oracle(r) - v), 1e-9);
            }
        }
    }
}

TEST(oracle, agrees_with_weighted_trace_route) {
    double worst = 0.0;
    for (int len = 0; len <= 3; len++) {
        for (const auto &w : enumerate_words(4, len)) {
            worst = std::max(worst, std::abs(eval_exact(w).value - jones_oracle(w)));
        }
    }
    EXPECT_LE(worst, 1e-9);
    std::mt19937 rng(4);
    for (int trial = 0; trial < 60; trial++) {
        int m = 2 + static_cast<int>(rng() % 5);
        int len = static_cast<int>(rng() % 9);
        std::vector<int> w;
        for (int k = 0; k < len; k++) {
            int g = 1 + static_cast<int>(rng() % (m - 1));
            w.push_back(rng() % 2 ? g : -g);
        }
        BraidWord b(m, w);
        EXPECT_LE(std::abs(eval_exact(b).value - jones_oracle(b)), 1e-9) << b.str();
    }
}

TEST(oracle, root_choice) {
    // The four A with A^-4 = e^{2 pi i/5} are A0 i^k. Negating A leaves every
    // value unchanged; A0 i and A0 i^3 flip the sign of t^{1/2}, which shows up
    // on closures with an even number of components.
    const cd a0 = OracleConfig::standard().a;
    const cd i(0.0, 1.0);
    for (int k = 0; k < 4; k++) {
        OracleConfig cfg{a0 * std::pow(i, k)};
        EXPECT_LE(std::abs(cfg.t() - GoldenConstants::t()), 1e-12);
        double worst = 0.0;
        for (int len = 0; len <= 3; len++) {
            for (const auto &w : enumerate_words(4, len)) {
                worst = std::max(worst, std::abs(eval_exact(w).value - jones_oracle(w, cfg)));
            }
        }
        if (k % 2 == 0) {
            EXPECT_LE(worst, 1e-9) << "root " << k;
        } else {
            EXPECT_GT(worst, 1e-3) << "root " << k;
        }
    }
}

TEST(oracle, resource_limit) {
    std::vector<int> w(kMaxOracleCrossings + 1, 1);
    EXPECT_THROW(kauffman_bracket(BraidWord(2, w)), ResourceLimitError);
    EXPECT_THROW(planar_state(3, std::vector<int>{5}, 0), DomainError);
}

TEST(oracle, json_output) {
    auto json = oracle_to_json(BraidWord(4, {1, 2, 3}));
    EXPECT_EQ(json.rfind(R"({"braid":"1 2 3","strands":4,"components":1,"bracket_re":)", 0), 0u);
    EXPECT_NE(json.find("\"jones_re\":1.0"), std::string::npos);
}
