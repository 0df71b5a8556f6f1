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

#ifndef JONESDQC1_BRAID_HPP
#define JONESDQC1_BRAID_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace jonesdqc1 {

/// A word in the braid group B_m.
///
/// Letters are signed 1-based generator indices: +g is s_g (strand g crosses
/// over strand g+1), -g is its inverse. The empty word is the identity braid.
class BraidWord {
   public:
    /// Throws DomainError if strands < 1 or a letter is 0 or |g| > strands-1.
    BraidWord(int strands, std::vector<int> word = {});

    int strands() const noexcept { return strands_; }
    const std::vector<int> &word() const noexcept { return word_; }
    std::size_t size() const noexcept { return word_.size(); }
    bool empty() const noexcept { return word_.empty(); }

    /// Canonical text: space-separated signed integers, e.g. "1 -2 3".
    std::string str() const;

    bool operator==(const BraidWord &) const = default;

   private:
    int strands_;
    std::vector<int> word_;
};

/// Permutation of strand positions induced by a braid once crossing signs are
/// forgotten. image(j) is the top position of the strand that ends at bottom
/// position j; for s1 s2 s3 this is the 4-cycle (1 2 3 4).
class StrandPermutation {
   public:
    explicit StrandPermutation(std::vector<int> image);

    static StrandPermutation identity(int strands);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    /// 1-based in, 1-based out.
    int operator()(int position) const { return image_.at(position - 1); }
    const std::vector<int> &image() const noexcept { return image_; }

    bool is_bijection() const;
    int cycle_count() const;
    /// Cycles in order of their smallest element, each starting there.
    std::vector<std::vector<int>> cycles() const;

    bool operator==(const StrandPermutation &) const = default;

   private:
    std::vector<int> image_;
};

/// Parses whitespace-separated tokens `s<k>`, `s<k>^-1`, `k`, `-k` (and `+k`).
/// Throws ParseError (kind syntax or out_of_range) naming the token and its
/// character offset.
BraidWord parse_braid(std::string_view text, int strands);

/// Parses {"strands": m, "word": [1, -2, 3]}.
BraidWord parse_braid_json(std::string_view json_text);
std::string braid_to_json(const BraidWord &braid);

int writhe(const BraidWord &braid);

StrandPermutation permutation(const BraidWord &braid);

/// Every word of the given length over the alphabet +1,-1,+2,-2,...,-(m-1),
/// in lexicographic order with respect to that alphabet order.
std::vector<BraidWord> enumerate_words(int strands, int length);

/// Words reachable by one application of far commutation (s_i s_j = s_j s_i,
/// |i-j| > 1, any signs) or Yang-Baxter (s_i s_j s_i = s_j s_i s_j, |i-j| = 1,
/// all three letters of equal sign) at any position. Duplicates removed, first
/// occurrence kept.
std::vector<BraidWord> relation_rewrites(const BraidWord &braid);

}  // namespace jonesdqc1

#endif
