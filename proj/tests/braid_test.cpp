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

#include "jonesdqc1/braid.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "jonesdqc1/errors.hpp"

using namespace jonesdqc1;

TEST(braid, parse_generator_tokens) {
    EXPECT_EQ(parse_braid("s1 s2 s3", 4).word(), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(parse_braid("1 -2 3", 4).word(), (std::vector<int>{1, -2, 3}));
    EXPECT_EQ(parse_braid("s2^-1  s1\ts3^-1", 4).word(), (std::vector<int>{-2, 1, -3}));
    EXPECT_EQ(parse_braid("+2", 4).word(), (std::vector<int>{2}));
}

TEST(braid, parse_empty_is_identity) {
    auto b = parse_braid("", 4);
    EXPECT_TRUE(b.empty());
    EXPECT_EQ(b.strands(), 4);
    EXPECT_TRUE(parse_braid("   \n ", 3).empty());
}

TEST(braid, parse_out_of_range_names_token) {
    try {
        parse_braid("s1 s9", 4);
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.kind(), ParseError::Kind::out_of_range);
        EXPECT_EQ(e.position(), 3u);
        EXPECT_NE(std::string(e.what()).find("s9"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("generator out of range"), std::string::npos);
    }
    EXPECT_THROW(parse_braid("0", 4), ParseError);
    EXPECT_THROW(parse_braid("-4", 4), ParseError);
}

TEST(braid, parse_syntax_errors_report_position) {
    for (auto [text, pos] : std::vector<std::pair<std::string, size_t>>{
             {"s1 x2", 3}, {"s", 0}, {"1 s2^2", 2}, {"1 2a", 2}, {"s-1", 0}, {"--1", 0}, {"+-1", 0}}) {
        try {
            parse_braid(text, 4);
            FAIL() << text;
        } catch (const ParseError &e) {
            EXPECT_EQ(e.kind(), ParseError::Kind::syntax) << text;
            EXPECT_EQ(e.position(), pos) << text;
        }
    }
}

TEST(braid, json_form) {
    auto b = parse_braid_json(R"({"strands": 4, "word": [1, -2, 3]})");
    EXPECT_EQ(b, BraidWord(4, {1, -2, 3}));
    EXPECT_EQ(parse_braid_json(braid_to_json(b)), b);
    EXPECT_THROW(parse_braid_json(R"({"strands": 4, "word": [1, 5]})"), ParseError);
    EXPECT_THROW(parse_braid_json(R"({"word": [1]})"), ParseError);
    EXPECT_THROW(parse_braid_json("[1,2"), ParseError);
}

TEST(braid, render_parse_roundtrip) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; trial++) {
        int m = 2 + static_cast<int>(rng() % 6);
        int len = static_cast<int>(rng() % 9);
        std::vector<int> w;
        for (int k = 0; k < len; k++) {
            int g = 1 + static_cast<int>(rng() % (m - 1));
            w.push_back(rng() % 2 ? g : -g);
        }
        BraidWord b(m, w);
        EXPECT_EQ(parse_braid(b.str(), m), b);
    }
}

TEST(braid, constructor_validates) {
    EXPECT_THROW(BraidWord(0, {}), DomainError);
    EXPECT_THROW(BraidWord(4, {4}), DomainError);
    EXPECT_THROW(BraidWord(4, {0}), DomainError);
    EXPECT_NO_THROW(BraidWord(1, {}));
}

TEST(braid, writhe) {
    EXPECT_EQ(writhe(BraidWord(4, {1, 2, 3})), 3);
    EXPECT_EQ(writhe(BraidWord(4, {1, -2, 3})), 1);
    EXPECT_EQ(writhe(BraidWord(4, {})), 0);
    EXPECT_EQ(writhe(BraidWord(3, {-1, -2, -1, -2})), -4);
}

TEST(braid, permutation_examples) {
    auto p = permutation(BraidWord(4, {1, 2, 3}));
    EXPECT_EQ(p.cycles(), (std::vector<std::vector<int>>{{1, 2, 3, 4}}));
    EXPECT_EQ(p.cycle_count(), 1);

    auto id = permutation(BraidWord(4, {}));
    EXPECT_EQ(id, StrandPermutation::identity(4));
    EXPECT_EQ(id.cycle_count(), 4);

    auto t = permutation(BraidWord(4, {1, 1, 1}));
    EXPECT_EQ(t.image(), (std::vector<int>{2, 1, 3, 4}));
    EXPECT_EQ(t.cycle_count(), 3);
}

TEST(braid, permutation_is_bijection_and_ignores_signs) {
    for (const auto &w : enumerate_words(4, 3)) {
        auto p = permutation(w);
        EXPECT_TRUE(p.is_bijection());
        std::vector<int> unsigned_word;
        for (int g : w.word()) {
            unsigned_word.push_back(std::abs(g));
        }
        EXPECT_EQ(p, permutation(BraidWord(4, unsigned_word)));
    }
}

TEST(braid, enumerate_counts_and_order) {
    auto words = enumerate_words(4, 3);
    ASSERT_EQ(words.size(), 216u);
    std::set<std::vector<int>> distinct;
    for (const auto &w : words) {
        distinct.insert(w.word());
    }
    EXPECT_EQ(distinct.size(), 216u);
    EXPECT_EQ(words.front().word(), (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(words[1].word(), (std::vector<int>{1, 1, -1}));
    EXPECT_EQ(words.back().word(), (std::vector<int>{-3, -3, -3}));

    auto empty = enumerate_words(4, 0);
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_TRUE(empty[0].empty());

    auto two = enumerate_words(2, 1);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].word(), std::vector<int>{1});
    EXPECT_EQ(two[1].word(), std::vector<int>{-1});

    EXPECT_EQ(enumerate_words(4, 2).size(), 36u);
    EXPECT_THROW(enumerate_words(4, -1), DomainError);
}

TEST(braid, relation_rewrites_examples) {
    auto far = relation_rewrites(BraidWord(4, {1, 3}));
    EXPECT_NE(std::find(far.begin(), far.end(), BraidWord(4, {3, 1})), far.end());

    auto yb = relation_rewrites(BraidWord(4, {1, 2, 1}));
    EXPECT_NE(std::find(yb.begin(), yb.end(), BraidWord(4, {2, 1, 2})), yb.end());

    auto yb_inverse = relation_rewrites(BraidWord(4, {-3, -2, -3}));
    EXPECT_NE(std::find(yb_inverse.begin(), yb_inverse.end(), BraidWord(4, {-2, -3, -2})), yb_inverse.end());

    EXPECT_TRUE(relation_rewrites(BraidWord(4, {})).empty());
    // Adjacent generators do not commute; mixed signs are not rewritten by Yang-Baxter.
    EXPECT_TRUE(relation_rewrites(BraidWord(4, {1, 2})).empty());
    EXPECT_TRUE(relation_rewrites(BraidWord(4, {1, -2, 1})).empty());
}

TEST(braid, rewrites_preserve_writhe_and_permutation) {
    for (int len = 2; len <= 4; len++) {
        for (const auto &w : enumerate_words(4, len)) {
            for (const auto &r : relation_rewrites(w)) {
                EXPECT_EQ(writhe(r), writhe(w));
                EXPECT_EQ(permutation(r), permutation(w));
                EXPECT_NE(r, w);
            }
        }
    }
}
