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

#include <bit>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <vector>

#include <nlohmann/json.hpp>
#include "jonesdqc1/errors.hpp"

namespace jonesdqc1 {

namespace {

using cd = std::complex<double>;

cd int_pow(cd base, long long e) {
    if (e < 0) {
        base = 1.0 / base;
        e = -e;
    }
    cd out = 1.0;
    while (e) {
        if (e & 1) {
            out *= base;
        }
        base *= base;
        e >>= 1;
    }
    return out;
}

class UnionFind {
   public:
    explicit UnionFind(int n) : parent_(n), components_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[a] = b;
            components_--;
        }
    }

    int components() const { return components_; }

   private:
    std::vector<int> parent_;
    int components_;
};

/// True if crossing k is smoothed so that its two strands run straight through.
bool vertical_smoothing(int letter, std::uint64_t smoothing_choices, int k) {
    bool b_smoothing = (smoothing_choices >> k) & 1;
    // A-smoothing of a positive crossing is vertical; of a negative one, cup-cap.
    return (letter > 0) != b_smoothing;
}

void check_word(int strands, std::span<const int> word) {
    if (strands < 1) {
        throw DomainError("oracle needs at least one strand");
    }
    for (int g : word) {
        if (g == 0 || std::abs(g) > strands - 1) {
            throw DomainError("generator out of range: " + std::to_string(g));
        }
    }
}

}  // namespace

OracleConfig OracleConfig::standard() { return {std::polar(1.0, 2.0 * std::numbers::pi / 5.0)}; }

namespace {

int union_find_loops(int strands, std::span<const int> word, std::uint64_t smoothing_choices) {
    const int c = static_cast<int>(word.size());
    const int m = strands;
    UnionFind uf((c + 1) * m);
    auto node = [m](int layer, int j) { return layer * m + j; };
    for (int k = 0; k < c; k++) {
        const int p = std::abs(word[k]) - 1;
        for (int j = 0; j < m; j++) {
            if (j != p && j != p + 1) {
                uf.unite(node(k, j), node(k + 1, j));
            }
        }
        if (vertical_smoothing(word[k], smoothing_choices, k)) {
            uf.unite(node(k, p), node(k + 1, p));
            uf.unite(node(k, p + 1), node(k + 1, p + 1));
        } else {
            uf.unite(node(k, p), node(k, p + 1));
            uf.unite(node(k + 1, p), node(k + 1, p + 1));
        }
    }
    for (int j = 0; j < m; j++) {
        uf.unite(node(c, j), node(0, j));
    }
    return uf.components();
}

}  // namespace

PlanarState planar_state(int strands, std::span<const int> word, std::uint64_t smoothing_choices) {
    check_word(strands, word);
    return {smoothing_choices, union_find_loops(strands, word, smoothing_choices)};
}

int traced_loop_count(int strands, std::span<const int> word, std::uint64_t smoothing_choices) {
    check_word(strands, word);
    const int c = static_cast<int>(word.size());
    const int m = strands;
    if (c == 0) {
        return m;
    }
    // A point is (layer, position) with layers 0..c-1; layer c is layer 0.
    std::vector<bool> visited(static_cast<size_t>(c) * m, false);
    int loops = 0;
    for (int start_layer = 0; start_layer < c; start_layer++) {
        for (int start_pos = 0; start_pos < m; start_pos++) {
            if (visited[start_layer * m + start_pos]) {
                continue;
            }
            loops++;
            int layer = start_layer, pos = start_pos;
            bool down = true;
            do {
                visited[layer * m + pos] = true;
                if (down) {
                    // Enter crossing `layer` from above.
                    const int p = std::abs(word[layer]) - 1;
                    bool involved = pos == p || pos == p + 1;
                    if (!involved || vertical_smoothing(word[layer], smoothing_choices, layer)) {
                        layer = (layer + 1) % c;
                    } else {
                        pos = pos == p ? p + 1 : p;
                        down = false;
                    }
                } else {
                    // Enter crossing `layer - 1` from below.
                    const int k = (layer - 1 + c) % c;
                    const int p = std::abs(word[k]) - 1;
                    bool involved = pos == p || pos == p + 1;
                    if (!involved || vertical_smoothing(word[k], smoothing_choices, k)) {
                        layer = k;
                    } else {
                        pos = pos == p ? p + 1 : p;
                        down = true;
                    }
                }
            } while (layer != start_layer || pos != start_pos);
        }
    }
    return loops;
}

std::complex<double> kauffman_bracket(int strands, std::span<const int> word, const OracleConfig &cfg) {
    check_word(strands, word);
    const int c = static_cast<int>(word.size());
    if (c > kMaxOracleCrossings) {
        throw ResourceLimitError("state sum limited to " + std::to_string(kMaxOracleCrossings) +
                                 " crossings, got " + std::to_string(c));
    }
    std::vector<cd> a_pow(2 * c + 1);  // a_pow[e + c] = A^e
    for (int e = -c; e <= c; e++) {
        a_pow[e + c] = int_pow(cfg.a, e);
    }
    const cd d = cfg.d();
    std::vector<cd> d_pow(strands + c + 1);
    d_pow[0] = 1.0;
    for (size_t l = 1; l < d_pow.size(); l++) {
        d_pow[l] = d_pow[l - 1] * d;
    }

    cd total = 0.0;
    const std::uint64_t states = std::uint64_t{1} << c;
    for (std::uint64_t s = 0; s < states; s++) {
        const int b_count = std::popcount(s);
        const int loops = union_find_loops(strands, word, s);
        total += a_pow[(c - b_count) - b_count + c] * d_pow[loops - 1];
    }
    return total;
}

std::complex<double> kauffman_bracket(const BraidWord &braid, const OracleConfig &cfg) {
    return kauffman_bracket(braid.strands(), braid.word(), cfg);
}

std::complex<double> jones_oracle(const BraidWord &braid, const OracleConfig &cfg) {
    return int_pow(-cfg.a, -3LL * writhe(braid)) * kauffman_bracket(braid, cfg);
}

int component_count(const BraidWord &braid) { return permutation(braid).cycle_count(); }

std::string oracle_to_json(const BraidWord &braid, const OracleConfig &cfg) {
    const cd bracket = kauffman_bracket(braid, cfg);
    const cd jones = int_pow(-cfg.a, -3LL * writhe(braid)) * bracket;
    nlohmann::ordered_json j = {{"braid", braid.str()},         {"strands", braid.strands()},
                                {"components", component_count(braid)}, {"bracket_re", bracket.real()},
                                {"bracket_im", bracket.imag()},   {"jones_re", jones.real()},
                                {"jones_im", jones.imag()}};
    return j.dump();
}

}  // namespace jonesdqc1
